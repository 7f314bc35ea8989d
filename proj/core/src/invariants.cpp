#include "conevol/invariants.hpp"

#include "conevol/errors.hpp"
#include "json_detail.hpp"

namespace conevol {

namespace {

void require_angle(const PiScalar& alpha, const char* what) {
  if (alpha.grade() != 1) {
    throw GradeError(std::string(what) + " must be a grade-1 scalar (a rational multiple of pi), got grade " +
                     std::to_string(alpha.grade()));
  }
}

// 1 - 1/p - 1/q, the coefficient under the lower existence bound.
Rational lower_bound_coeff(const TorusLinkParams& params) {
  return Rational(1) - Rational(1, params.p()) - Rational(1, params.q());
}

void require_asserted(const TorusLinkParams& params, const PiScalar& alpha,
                      bool force) {
  if (force || admits_spherical(params, alpha)) return;
  const AngleInterval window = existence_interval(params);
  throw NotAssertedError(
      "no spherical structure asserted here: alpha = " + alpha.to_text() +
      " is outside the open window (" + window.lower.to_text() + ", " +
      window.upper.to_text() + ") for t(" + std::to_string(params.p()) + ", " +
      std::to_string(params.q()) + "); use force to evaluate the analytic continuation");
}

}  // namespace

PiScalar AngleInterval::effective_lower() const {
  const PiScalar zero_angle = PiScalar::zero(1);
  return lower < zero_angle ? zero_angle : lower;
}

AngleInterval existence_interval(const TorusLinkParams& params) {
  const Rational lo = lower_bound_coeff(params);
  const Rational hi = Rational(1) - Rational(1, params.p()) + Rational(1, params.q());
  return AngleInterval{pi_times(Rational(2) * lo), pi_times(Rational(2) * hi)};
}

bool admits_spherical(const TorusLinkParams& params, const PiScalar& alpha) {
  require_angle(alpha, "cone angle");
  if (alpha.coeff().sign() <= 0) return false;  // cone angles are positive
  return existence_interval(params).contains(alpha);
}

PiScalar excess(const TorusLinkParams& params, const PiScalar& alpha) {
  require_angle(alpha, "cone angle");
  const PiScalar half_alpha = alpha * PiScalar(Rational(1, 2), 0);
  return half_alpha - pi_times(lower_bound_coeff(params));
}

PiScalar volume(const TorusLinkParams& params, const PiScalar& alpha, bool force) {
  require_asserted(params, alpha, force);
  const PiScalar x = excess(params, alpha);
  return PiScalar(Rational(params.p() * params.q(), 2), 0) * x.square();
}

PiScalar volume_derivative(const TorusLinkParams& params, const PiScalar& alpha,
                           bool force) {
  require_asserted(params, alpha, force);
  return PiScalar(Rational(params.p() * params.q(), 2), 0) * excess(params, alpha);
}

PiScalar strand_length(const TorusLinkParams& params, const PiScalar& alpha,
                       bool force) {
  require_asserted(params, alpha, force);
  return PiScalar(Rational(params.lcm()), 0) * excess(params, alpha);
}

PiScalar two_bridge_volume(std::int64_t p, const PiScalar& alpha,
                           const PiScalar& beta) {
  if (p < 1) {
    throw ValidationError("two-bridge index must satisfy p >= 1, got " +
                          std::to_string(p));
  }
  if (p > TorusLinkParams::kMaxParameter) {
    throw ValidationError("two-bridge index " + std::to_string(p) +
                          " exceeds the supported parameter range");
  }
  require_angle(alpha, "cone angle alpha");
  require_angle(beta, "cone angle beta");
  const PiScalar mean_turn = (alpha + beta) * PiScalar(Rational(p, 2), 0);
  const PiScalar inner = mean_turn - pi_times(Rational(p - 1));
  return inner.square() * PiScalar(Rational(1, 2 * p), 0);
}

PiScalar covering_residual(const TorusLinkParams& params, const PiScalar& alpha) {
  require_angle(alpha, "cone angle");
  const PiScalar direct = volume(params, alpha, /*force=*/true);
  const PiScalar branch_angle = pi_times(Rational(2, params.q()));
  const PiScalar covered = PiScalar(Rational(params.q()), 0) *
                           two_bridge_volume(params.p(), alpha, branch_angle);
  return direct - covered;
}

InvariantReport make_report(const TorusLinkParams& params, const PiScalar& alpha,
                            bool force) {
  require_asserted(params, alpha, force);
  InvariantReport report{
      .params = params,
      .alpha = alpha,
      .interval = existence_interval(params),
      .asserted_spherical = admits_spherical(params, alpha),
      .forced = false,
      .volume = {},
      .length_per_component = {},
      .length_total = {},
      .covering_residual = covering_residual(params, alpha),
  };
  report.forced = force && !report.asserted_spherical;
  report.volume = volume(params, alpha, force);
  report.length_per_component = strand_length(params, alpha, force);
  report.length_total = PiScalar(Rational(params.components()), 0) *
                        *report.length_per_component;
  return report;
}

std::string to_json_string(const InvariantReport& report) {
  nlohmann::ordered_json j;
  j["params"] = detail::params_json(report.params);
  j["degenerate_unknot"] = report.params.is_degenerate_unknot();
  j["alpha"] = detail::scalar_json(report.alpha);
  nlohmann::ordered_json window;
  window["lower"] = detail::scalar_json(report.interval.lower);
  window["upper"] = detail::scalar_json(report.interval.upper);
  window["width"] = detail::scalar_json(report.interval.width());
  window["effective_lower"] = detail::scalar_json(report.interval.effective_lower());
  j["interval"] = window;
  j["asserted_spherical"] = report.asserted_spherical;
  j["forced"] = report.forced;
  j["volume"] = report.volume ? detail::scalar_json(*report.volume)
                              : nlohmann::ordered_json(nullptr);
  j["length_per_component"] =
      report.length_per_component ? detail::scalar_json(*report.length_per_component)
                                  : nlohmann::ordered_json(nullptr);
  j["length_total"] = report.length_total ? detail::scalar_json(*report.length_total)
                                          : nlohmann::ordered_json(nullptr);
  j["covering_residual"] = detail::scalar_json(report.covering_residual);
  return j.dump(2) + "\n";
}

}  // namespace conevol
