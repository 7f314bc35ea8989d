#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conevol/invariants.hpp"

namespace conevol {

/// Knobs of the randomized identity suite. Defaults match the standing
/// verification run: 1000 trials over 1 <= p <= q <= 50, seed 42.
struct VerificationConfig {
  std::int64_t trials = 1000;
  std::int64_t p_max = 50;
  std::int64_t q_max = 50;
  std::uint64_t seed = 42;
  double fd_step = 1e-6;  // radians
  double rel_tol = 1e-9;  // for the finite-difference residual
};

struct VerificationFailure {
  std::string check_name;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string alpha;
  std::string expected;
  std::string got;
  double residual = 0.0;
};

/// Outcome of one suite run. Empty failures means overall pass; failures
/// are data, not errors, so a run always completes.
struct VerificationReport {
  std::int64_t cases_run = 0;
  std::vector<std::pair<std::string, std::int64_t>> checks_run;
  std::vector<VerificationFailure> failures;
  double max_fd_residual = 0.0;

  bool pass() const { return failures.empty(); }
};

/// Straight-line double transcription of the volume formula,
/// (pq/2) * (alpha/2 - pi(1 - 1/p - 1/q))^2, kept deliberately separate
/// from the exact path so the two can cross-check each other.
double naive_float_volume(std::int64_t p, std::int64_t q, double alpha_radians);

/// Relative residual of the central difference of the float volume at
/// alpha against the exact Schlafli identity (components/2) * length,
/// normalized by max(1, |dVol/dalpha|). The stencil is evaluated in
/// extended precision so the residual isolates derivative bugs from
/// rounding. Throws SamplingError when alpha +- h leaves the window.
double schlafli_fd_residual(const TorusLinkParams& params, const PiScalar& alpha,
                            double h);

/// Seeded randomized sweep of every algebraic identity: covering residual
/// (inside and outside the window), volume symmetry in (p, q), the exact
/// Schlafli identity, two-bridge consistency, boundary-degeneracy zeros,
/// float finite differences, and exact-vs-naive-float agreement.
/// Deterministic byte-for-byte given the same config.
VerificationReport run_identity_suite(const VerificationConfig& config);

std::string to_json_string(const VerificationReport& report);

/// Human-readable pass/fail summary, one line per check kind.
std::string summary_table(const VerificationReport& report);

}  // namespace conevol
