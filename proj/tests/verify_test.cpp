#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conevol/angle.hpp"
#include "conevol/errors.hpp"
#include "conevol/verify.hpp"

using conevol::PiScalar;
using conevol::Rational;
using conevol::SamplingError;
using conevol::TorusLinkParams;
using conevol::VerificationConfig;
using conevol::VerificationReport;
using conevol::naive_float_volume;
using conevol::pi_times;
using conevol::run_identity_suite;
using conevol::schlafli_fd_residual;

TEST_SUITE("verify") {

TEST_CASE("naive float volume agrees with the exact path") {
  const TorusLinkParams trefoil(2, 3);
  const PiScalar alpha = pi_times(Rational(1));
  const double exact = volume(trefoil, alpha).to_double();
  const double naive = naive_float_volume(2, 3, alpha.to_double());
  CHECK(std::fabs(exact - naive) / std::fabs(exact) < 1e-12);

  // boundary zero: absolute agreement
  CHECK(std::fabs(naive_float_volume(2, 3, std::numbers::pi / 3.0)) < 1e-12);

  // radians given as a float, exact path through the parsed angle
  const conevol::AngleExpr two = conevol::parse_angle("2.0");
  const double exact2 = volume(TorusLinkParams(7, 9), two.value, true).to_double();
  const double naive2 = naive_float_volume(7, 9, 2.0);
  CHECK(std::fabs(exact2 - naive2) / std::fabs(exact2) < 1e-12);
}

TEST_CASE("finite-difference residual is rounding-level inside the window") {
  CHECK(schlafli_fd_residual(TorusLinkParams(2, 3), pi_times(Rational(1)), 1e-6) <
        1e-9);
  CHECK(schlafli_fd_residual(TorusLinkParams(4, 6), pi_times(Rational(4, 3)), 1e-6) <
        1e-9);
  // quadratic volume: no truncation error even for a coarse step
  CHECK(schlafli_fd_residual(TorusLinkParams(2, 3), pi_times(Rational(1)), 1e-2) <
        1e-4);
}

TEST_CASE("stencil that leaves the window is a sampling error") {
  // alpha - lower ~ 1e-7 rad < h = 1e-6
  const PiScalar near_bound = pi_times(Rational(1, 3) + Rational(1, 31415927));
  CHECK_THROWS_AS(
      schlafli_fd_residual(TorusLinkParams(2, 3), near_bound, 1e-6),
      SamplingError);
  CHECK_THROWS_AS(
      schlafli_fd_residual(TorusLinkParams(2, 3), pi_times(Rational(1)), 0.0),
      conevol::ValidationError);
}

TEST_CASE("identity suite passes on the standing configuration") {
  VerificationConfig config;  // 1000 trials, p,q <= 50, seed 42
  const VerificationReport report = run_identity_suite(config);
  CHECK(report.cases_run == 1000);
  CHECK(report.pass());
  CHECK(report.failures.empty());
  CHECK(report.max_fd_residual <= config.rel_tol);
  // every check kind actually ran
  CHECK(report.checks_run.size() == 8);
  for (const auto& [name, runs] : report.checks_run) {
    CAPTURE(name);
    CHECK(runs >= 1000);
  }
}

TEST_CASE("zero trials is a vacuous pass") {
  VerificationConfig config;
  config.trials = 0;
  const VerificationReport report = run_identity_suite(config);
  CHECK(report.cases_run == 0);
  CHECK(report.pass());
}

TEST_CASE("coarse fd step still verifies: quadratic has no truncation error") {
  VerificationConfig config;
  config.trials = 200;
  config.fd_step = 1e-2;
  config.rel_tol = 1e-4;
  const VerificationReport report = run_identity_suite(config);
  CHECK(report.pass());
  CHECK(report.max_fd_residual < 1e-4);
}

TEST_CASE("same seed gives a byte-identical report") {
  VerificationConfig config;
  config.trials = 150;
  config.seed = 777;
  const std::string first = to_json_string(run_identity_suite(config));
  const std::string second = to_json_string(run_identity_suite(config));
  CHECK(first == second);
}

TEST_CASE("config validation") {
  VerificationConfig config;
  config.trials = -1;
  CHECK_THROWS_AS(run_identity_suite(config), conevol::ValidationError);
  config = {};
  config.rel_tol = 2.0;
  CHECK_THROWS_AS(run_identity_suite(config), conevol::ValidationError);
  config = {};
  config.fd_step = 0.0;
  CHECK_THROWS_AS(run_identity_suite(config), conevol::ValidationError);
  config = {};
  config.p_max = 0;
  CHECK_THROWS_AS(run_identity_suite(config), conevol::ValidationError);
}

TEST_CASE("failures would be reported as data, not thrown") {
  // tighten rel_tol beyond the rounding floor to watch the report mechanism
  VerificationConfig config;
  config.trials = 50;
  config.rel_tol = 1e-18;
  const VerificationReport report = run_identity_suite(config);
  CHECK_FALSE(report.pass());
  CHECK(report.cases_run == 50);
  for (const auto& failure : report.failures) {
    CHECK(failure.check_name == "schlafli_fd");
    CHECK(failure.residual > 1e-18);
  }
}

}  // TEST_SUITE
