#include "conevol/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <tuple>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "conevol/errors.hpp"
#include "conevol/format.hpp"
#include "json_detail.hpp"

namespace conevol {

namespace {

// Extended-precision image of an exact scalar, for centering the
// finite-difference stencil; double-rounding the center would bleed
// (V''/2)*ulp(alpha) into the residual of very narrow windows.
long double to_long_double(const PiScalar& x) {
  namespace mp = boost::multiprecision;
  static const mp::cpp_bin_float_50 pi =
      boost::math::constants::pi<mp::cpp_bin_float_50>();
  mp::cpp_bin_float_50 value = mp::cpp_bin_float_50(x.coeff().numerator()) /
                               mp::cpp_bin_float_50(x.coeff().denominator());
  for (int g = 0; g < x.grade(); ++g) value *= pi;
  return value.convert_to<long double>();
}

// Bounded draws via rejection so identical seeds give identical streams on
// every standard library (uniform_int_distribution is not pinned).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % n;
}

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  bounded(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Uniform rational multiple of pi with denominator <= 1000, drawn from the
// middle 98% of the effective window. The 1% inset keeps the float
// cross-checks well conditioned: at the window edge the volume vanishes and
// a relative float comparison there measures angle quantization, not code.
PiScalar sample_alpha(std::mt19937_64& rng, const AngleInterval& window) {
  const Rational lo = window.effective_lower().coeff();
  const Rational hi = window.upper.coeff();
  const Rational inset = (hi - lo) * Rational(1, 100);
  const Rational a = lo + inset;
  const Rational b = hi - inset;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::int64_t den = uniform_int(rng, 1, 1000);
    const BigInt n_min = (a * Rational(den)).ceil();
    const BigInt n_max = (b * Rational(den)).floor();
    if (n_min > n_max) continue;
    const BigInt span_big = n_max - n_min + 1;
    const std::uint64_t span = span_big.convert_to<std::uint64_t>();
    const BigInt n = n_min + BigInt(bounded(rng, span));
    return pi_times(Rational(n, den));
  }
  // Window narrower than the denominator grid; exact midpoint still works.
  return pi_times((a + b) * Rational(1, 2));
}

// Volume formula straight from raw (p, q), no normalization; used to check
// that the formula itself, not just normalized params, is symmetric.
PiScalar raw_volume(std::int64_t p, std::int64_t q, const PiScalar& alpha) {
  const Rational bound = Rational(1) - Rational(1, p) - Rational(1, q);
  const PiScalar x = alpha * PiScalar(Rational(1, 2), 0) - pi_times(bound);
  return PiScalar(Rational(p * q, 2), 0) * x.square();
}

class SuiteState {
public:
  explicit SuiteState(const VerificationConfig& config) : config_(config) {}

  void count(const std::string& check) {
    for (auto& [name, runs] : report_.checks_run) {
      if (name == check) {
        ++runs;
        return;
      }
    }
    report_.checks_run.emplace_back(check, 1);
  }

  void fail(const std::string& check, const TorusLinkParams& params,
            const PiScalar& alpha, std::string expected, std::string got,
            double residual) {
    report_.failures.push_back(VerificationFailure{
        check, params.p(), params.q(), alpha.to_text(), std::move(expected),
        std::move(got), residual});
  }

  void expect_zero(const std::string& check, const TorusLinkParams& params,
                   const PiScalar& alpha, const PiScalar& got, int grade) {
    count(check);
    if (got.is_zero() && got.grade() == grade) return;
    fail(check, params, alpha, PiScalar::zero(grade).to_text() + " (grade " +
                                   std::to_string(grade) + ")",
         got.to_text() + " (grade " + std::to_string(got.grade()) + ")",
         std::fabs(got.to_double()));
  }

  void expect_equal(const std::string& check, const TorusLinkParams& params,
                    const PiScalar& alpha, const PiScalar& expected,
                    const PiScalar& got) {
    count(check);
    if (expected == got) return;
    fail(check, params, alpha, expected.to_text(), got.to_text(),
         std::fabs(expected.to_double() - got.to_double()));
  }

  void expect_within(const std::string& check, const TorusLinkParams& params,
                     const PiScalar& alpha, double residual, double tol) {
    count(check);
    if (residual <= tol) return;
    fail(check, params, alpha, "residual <= " + format_sig12(tol),
         "residual = " + format_sig12(residual), residual);
  }

  VerificationReport& report() { return report_; }
  const VerificationConfig& config() const { return config_; }

private:
  VerificationConfig config_;
  VerificationReport report_;
};

constexpr double kCrossPathTol = 1e-12;

void run_trial(SuiteState& state, std::mt19937_64& rng) {
  const VerificationConfig& config = state.config();
  const std::int64_t p =
      uniform_int(rng, 1, std::min(config.p_max, config.q_max));
  const std::int64_t q = uniform_int(rng, p, config.q_max);
  const TorusLinkParams params(p, q);
  const AngleInterval window = existence_interval(params);
  const PiScalar alpha = sample_alpha(rng, window);

  // Covering identity, inside and strictly outside the window: it is an
  // algebraic identity, so position must not matter.
  state.expect_zero("covering_identity", params, alpha,
                    covering_residual(params, alpha), 2);
  const PiScalar alpha_out =
      window.upper + pi_times(Rational(uniform_int(rng, 1, 1000), 1000));
  state.expect_zero("covering_identity_outside", params, alpha_out,
                    covering_residual(params, alpha_out), 2);

  // Symmetry of the volume in (p, q), both through normalization and on the
  // raw formula.
  const PiScalar vol = volume(params, alpha);
  state.expect_equal("volume_symmetry", params, alpha, vol,
                     raw_volume(p, q, alpha));
  state.expect_equal("volume_symmetry", params, alpha, vol,
                     raw_volume(q, p, alpha));

  // Exact Schlafli identity dV/dalpha = (components/2) * length.
  state.expect_equal(
      "schlafli_exact", params, alpha, volume_derivative(params, alpha),
      PiScalar(Rational(params.components(), 2), 0) * strand_length(params, alpha));

  // Two-bridge consistency at equal angles.
  const std::int64_t bridge = uniform_int(rng, 1, 100);
  state.expect_equal("two_bridge_consistency", TorusLinkParams(2, 2 * bridge),
                     alpha, volume(TorusLinkParams(2, 2 * bridge), alpha, true),
                     two_bridge_volume(bridge, alpha, alpha));

  // Everything degenerates to exact zero at the raw lower endpoint.
  const PiScalar at_bound = window.lower;
  state.expect_zero("boundary_degeneracy", params, at_bound,
                    volume(params, at_bound, true), 2);
  state.expect_zero("boundary_degeneracy", params, at_bound,
                    volume_derivative(params, at_bound, true), 1);
  state.expect_zero("boundary_degeneracy", params, at_bound,
                    strand_length(params, at_bound, true), 1);

  // Exact path and naive float path must tell the same story. The naive side
  // rounds alpha to a double and loses absolute accuracy ~eps in the
  // subtraction alpha/2 - pi(1 - 1/p - 1/q); both effects enter the volume
  // through the derivative, so the irreducible gap between the paths is a
  // small multiple of eps * |dV/dalpha|. That is budgeted on top of the
  // relative tolerance; without it a narrow window (q beyond ~90) trips the
  // check with no bug present, while a real formula bug sits orders above
  // either term.
  const double exact_float = vol.to_double();
  const double a = alpha.to_double();
  const double naive = naive_float_volume(p, q, a);
  const double scale = std::max(std::fabs(exact_float), std::fabs(naive));
  const double derivative =
      std::fabs(volume_derivative(params, alpha, true).to_double());
  const double evaluation_noise =
      32 * std::numeric_limits<double>::epsilon() * derivative;
  state.expect_within("cross_path_float", params, alpha,
                      std::fabs(exact_float - naive) / scale,
                      kCrossPathTol + evaluation_noise / scale);

  // Float finite difference against the exact derivative.
  const double lo = window.effective_lower().to_double();
  const double hi = window.upper.to_double();
  if (a - 2 * config.fd_step > lo && a + 2 * config.fd_step < hi) {
    const double residual = schlafli_fd_residual(params, alpha, config.fd_step);
    state.report().max_fd_residual =
        std::max(state.report().max_fd_residual, residual);
    state.expect_within("schlafli_fd", params, alpha, residual, config.rel_tol);
  }
}

}  // namespace

double naive_float_volume(std::int64_t p, std::int64_t q, double alpha_radians) {
  if (p < 1 || q < 1) {
    throw ValidationError("torus link parameters must satisfy p, q >= 1");
  }
  const double bound = std::numbers::pi * (1.0 - 1.0 / static_cast<double>(p) -
                                           1.0 / static_cast<double>(q));
  const double x = alpha_radians / 2.0 - bound;
  return static_cast<double>(p) * static_cast<double>(q) / 2.0 * x * x;
}

double schlafli_fd_residual(const TorusLinkParams& params, const PiScalar& alpha,
                            double h) {
  if (alpha.grade() != 1) {
    throw GradeError("cone angle must be a grade-1 scalar, got grade " +
                     std::to_string(alpha.grade()));
  }
  if (!(h > 0)) {
    throw ValidationError("finite-difference step must be positive");
  }
  const AngleInterval window = existence_interval(params);
  const double a = alpha.to_double();
  const double lo = window.effective_lower().to_double();
  const double hi = window.upper.to_double();
  if (!(a - h > lo && a + h < hi)) {
    throw SamplingError(
        "finite-difference stencil leaves the existence window at alpha = " +
        alpha.to_text() + " with h = " + format_sig12(h) + "; shrink h");
  }

  // The volume is quadratic in alpha, so the central difference carries no
  // truncation error; evaluating the stencil in long double keeps the
  // rounding floor far below rel_tol even for the widest windows.
  const long double pi_ld = std::numbers::pi_v<long double>;
  const long double scale =
      static_cast<long double>(params.p()) * static_cast<long double>(params.q()) / 2.0L;
  const long double bound =
      pi_ld * (1.0L - 1.0L / static_cast<long double>(params.p()) -
               1.0L / static_cast<long double>(params.q()));
  const auto float_volume = [&](long double angle) {
    const long double x = angle / 2.0L - bound;
    return scale * x * x;
  };
  const long double step = h;
  const long double center = to_long_double(alpha);
  const long double fd =
      (float_volume(center + step) - float_volume(center - step)) /
      (2.0L * step);

  const double schlafli_side =
      (PiScalar(Rational(params.components(), 2), 0) *
       strand_length(params, alpha, /*force=*/true))
          .to_double();
  const double derivative =
      volume_derivative(params, alpha, /*force=*/true).to_double();
  return std::fabs(static_cast<double>(fd) - schlafli_side) /
         std::max(1.0, std::fabs(derivative));
}

VerificationReport run_identity_suite(const VerificationConfig& config) {
  if (config.trials < 0) throw ValidationError("trials must be >= 0");
  if (config.p_max < 1 || config.q_max < 1) {
    throw ValidationError("p_max and q_max must be >= 1");
  }
  if (!(config.fd_step > 0)) throw ValidationError("fd_step must be positive");
  if (!(config.rel_tol > 0 && config.rel_tol < 1)) {
    throw ValidationError("rel_tol must lie in (0, 1)");
  }

  SuiteState state(config);
  std::mt19937_64 rng(config.seed);
  for (std::int64_t trial = 0; trial < config.trials; ++trial) {
    run_trial(state, rng);
    ++state.report().cases_run;
  }
  std::sort(state.report().failures.begin(), state.report().failures.end(),
            [](const VerificationFailure& a, const VerificationFailure& b) {
              return std::tie(a.p, a.q, a.alpha, a.check_name) <
                     std::tie(b.p, b.q, b.alpha, b.check_name);
            });
  return std::move(state.report());
}

std::string to_json_string(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["cases_run"] = report.cases_run;
  nlohmann::ordered_json checks;
  for (const auto& [name, runs] : report.checks_run) checks[name] = runs;
  j["checks_run"] = std::move(checks);
  j["max_fd_residual"] = round_sig12(report.max_fd_residual);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const VerificationFailure& f : report.failures) {
    nlohmann::ordered_json entry;
    entry["check_name"] = f.check_name;
    entry["params"] = detail::params_json(TorusLinkParams(f.p, f.q));
    entry["alpha"] = f.alpha;
    entry["expected"] = f.expected;
    entry["got"] = f.got;
    entry["residual"] = round_sig12(f.residual);
    failures.push_back(std::move(entry));
  }
  j["failures"] = std::move(failures);
  j["pass"] = report.pass();
  return j.dump(2) + "\n";
}

std::string summary_table(const VerificationReport& report) {
  std::string out = "check                        runs  failed\n";
  for (const auto& [name, runs] : report.checks_run) {
    std::int64_t failed = 0;
    for (const VerificationFailure& f : report.failures) {
      if (f.check_name == name) ++failed;
    }
    char line[96];
    std::snprintf(line, sizeof(line), "%-27s %5lld  %6lld\n", name.c_str(),
                  static_cast<long long>(runs), static_cast<long long>(failed));
    out += line;
  }
  out += "cases_run: " + std::to_string(report.cases_run) +
         "   max_fd_residual: " + format_sig12(report.max_fd_residual) + "\n";
  out += std::string("result: ") + (report.pass() ? "PASS" : "FAIL") + " (" +
         std::to_string(report.failures.size()) + " failures)\n";
  for (const VerificationFailure& f : report.failures) {
    out += "  [" + f.check_name + "] t(" + std::to_string(f.p) + ", " +
           std::to_string(f.q) + ") alpha = " + f.alpha + ": expected " +
           f.expected + ", got " + f.got + "\n";
  }
  return out;
}

}  // namespace conevol
