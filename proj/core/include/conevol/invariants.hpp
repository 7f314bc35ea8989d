#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "conevol/pi_scalar.hpp"
#include "conevol/torus_link.hpp"

namespace conevol {

/// Open interval of cone angles (grade-1 endpoints, both ends excluded)
/// inside which a spherical structure is asserted.
struct AngleInterval {
  PiScalar lower;
  PiScalar upper;

  /// upper - lower; always equals (4/q)*pi.
  PiScalar width() const { return upper - lower; }

  /// max(lower, 0). Cone angles are positive, so when the raw lower bound
  /// is negative (p = 1) the effective window starts at zero.
  PiScalar effective_lower() const;

  /// Strict containment in the raw open interval, ignoring the positivity
  /// clamp. GradeError unless alpha has grade 1.
  bool contains(const PiScalar& alpha) const {
    return lower < alpha && alpha < upper;
  }
};

/// The open window 2pi(1 - 1/p - 1/q) < alpha < 2pi(1 - 1/p + 1/q).
AngleInterval existence_interval(const TorusLinkParams& params);

/// True iff alpha lies strictly inside the existence window and alpha > 0.
/// The positivity clamp matters only for p = 1, where the raw lower bound
/// is negative. Inside the window a spherical structure is asserted;
/// outside, nothing is claimed either way.
bool admits_spherical(const TorusLinkParams& params, const PiScalar& alpha);

/// The excess X = alpha/2 - pi(1 - 1/p - 1/q), the shared subexpression of
/// volume, derivative and length. Positive exactly above the lower bound.
PiScalar excess(const TorusLinkParams& params, const PiScalar& alpha);

/// Vol = (pq/2) * X^2 (grade 2). Without force, throws NotAssertedError
/// when admits_spherical is false; with force, evaluates the polynomial
/// anywhere (analytic continuation, never claimed geometric).
PiScalar volume(const TorusLinkParams& params, const PiScalar& alpha,
                bool force = false);

/// dVol/dalpha = (pq/2) * X (grade 1). Same gating as volume.
PiScalar volume_derivative(const TorusLinkParams& params, const PiScalar& alpha,
                           bool force = false);

/// Length of one singular component, lcm(p,q) * X (grade 1). All gcd(p,q)
/// components are congruent; total singular length is components * this.
/// Same gating as volume.
PiScalar strand_length(const TorusLinkParams& params, const PiScalar& alpha,
                       bool force = false);

/// Volume of the two-bridge torus link t(2, 2p) with independent cone
/// angles: (1/2p) * ((alpha+beta)/2 * p - pi(p-1))^2. Defined everywhere.
PiScalar two_bridge_volume(std::int64_t p, const PiScalar& alpha,
                           const PiScalar& beta);

/// volume(p,q,alpha) - q * two_bridge_volume(p, alpha, 2pi/q), evaluated
/// with force so it is defined for every alpha. The q-fold cyclic covering
/// makes this identically zero; any nonzero value is an implementation bug.
PiScalar covering_residual(const TorusLinkParams& params, const PiScalar& alpha);

/// Bundled exact + floating answers for one (p, q, alpha) query.
/// volume/length fields are present iff the structure is asserted or the
/// evaluation was forced; forced results are flagged.
struct InvariantReport {
  TorusLinkParams params;
  PiScalar alpha;
  AngleInterval interval;
  bool asserted_spherical = false;
  bool forced = false;
  std::optional<PiScalar> volume;
  std::optional<PiScalar> length_per_component;
  std::optional<PiScalar> length_total;
  PiScalar covering_residual;
};

/// Assemble the full report. Throws NotAssertedError when alpha is outside
/// the window and force is false.
InvariantReport make_report(const TorusLinkParams& params, const PiScalar& alpha,
                            bool force = false);

std::string to_json_string(const InvariantReport& report);

}  // namespace conevol
