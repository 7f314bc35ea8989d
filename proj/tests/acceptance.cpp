// Acceptance suite: one line per criterion, pinned tolerances, exit 0 only
// if every criterion holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "conevol/angle.hpp"
#include "conevol/format.hpp"
#include "conevol/invariants.hpp"
#include "conevol/sweep.hpp"
#include "conevol/torus_link.hpp"
#include "conevol/verify.hpp"

using conevol::AngleInterval;
using conevol::BigInt;
using conevol::PiScalar;
using conevol::Rational;
using conevol::TorusLinkParams;
using conevol::pi_squared_times;
using conevol::pi_times;

namespace {

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

TorusLinkParams random_params(std::mt19937_64& rng, std::int64_t limit) {
  const std::int64_t p = uniform_int(rng, 1, limit);
  const std::int64_t q = uniform_int(rng, p, limit);
  return TorusLinkParams(p, q);
}

// Rational angle with denominator <= 1000, uniform over the middle 98% of
// the effective window (edges excluded, where the float cross-check is
// ill-conditioned because the volume vanishes).
PiScalar random_alpha(std::mt19937_64& rng, const AngleInterval& window) {
  const Rational lo = window.effective_lower().coeff();
  const Rational hi = window.upper.coeff();
  const Rational inset = (hi - lo) * Rational(1, 100);
  const Rational a = lo + inset;
  const Rational b = hi - inset;
  for (;;) {
    const std::int64_t den = uniform_int(rng, 1, 1000);
    const BigInt n_min = (a * Rational(den)).ceil();
    const BigInt n_max = (b * Rational(den)).floor();
    if (n_min > n_max) continue;
    const BigInt span = n_max - n_min + 1;
    const BigInt n = n_min + BigInt(bounded(rng, span.convert_to<std::uint64_t>()));
    return pi_times(Rational(n, den));
  }
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(CONEVOL_CLI_BIN) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

int failures = 0;

void criterion(int id, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("[%s] %d. %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
}

}  // namespace

int main() {
  criterion(1, "covering identity: exact zero on 1000 seeded cases, zero tolerance",
            [](std::string& detail) {
              std::mt19937_64 rng(42);
              for (int i = 0; i < 1000; ++i) {
                const TorusLinkParams params = random_params(rng, 50);
                const PiScalar alpha =
                    random_alpha(rng, existence_interval(params));
                const PiScalar residual = covering_residual(params, alpha);
                if (residual != PiScalar::zero(2)) {
                  detail = "t(" + std::to_string(params.p()) + "," +
                           std::to_string(params.q()) + ") alpha=" +
                           alpha.to_text() + " residual=" + residual.to_text();
                  return false;
                }
              }
              return true;
            });

  criterion(2, "Schlafli identity: dV/dalpha = (components/2)*length, exact on the same sample",
            [](std::string& detail) {
              std::mt19937_64 rng(42);
              for (int i = 0; i < 1000; ++i) {
                const TorusLinkParams params = random_params(rng, 50);
                const PiScalar alpha =
                    random_alpha(rng, existence_interval(params));
                const PiScalar lhs = volume_derivative(params, alpha);
                const PiScalar rhs =
                    PiScalar(Rational(params.components(), 2), 0) *
                    strand_length(params, alpha);
                if (lhs != rhs) {
                  detail = "t(" + std::to_string(params.p()) + "," +
                           std::to_string(params.q()) + ") alpha=" +
                           alpha.to_text();
                  return false;
                }
              }
              return true;
            });

  criterion(3, "finite-difference oracle: residual <= 1e-9 at h = 1e-6, 1000 cases in < 5 s",
            [](std::string& detail) {
              std::mt19937_64 rng(42);
              const auto start = std::chrono::steady_clock::now();
              double worst = 0.0;
              int checked = 0;
              for (int i = 0; i < 1000; ++i) {
                const TorusLinkParams params = random_params(rng, 50);
                const AngleInterval window = existence_interval(params);
                const PiScalar alpha = random_alpha(rng, window);
                const double a = alpha.to_double();
                const double h = 1e-6;
                if (!(a - h > window.effective_lower().to_double() &&
                      a + h < window.upper.to_double())) {
                  continue;
                }
                const double residual = schlafli_fd_residual(params, alpha, h);
                worst = std::max(worst, residual);
                ++checked;
                if (residual > 1e-9) {
                  detail = "residual " + conevol::format_sig12(residual) + " at t(" +
                           std::to_string(params.p()) + "," +
                           std::to_string(params.q()) + ")";
                  return false;
                }
              }
              const double seconds =
                  std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
              detail = std::to_string(checked) + " stencils, max residual " +
                       conevol::format_sig12(worst) + ", " +
                       conevol::format_sig12(seconds) + " s";
              return checked >= 990 && seconds < 5.0;
            });

  criterion(4, "trefoil spot values: Vol = pi^2/3 (float 3.289868134 +- 1e-9), length = 2pi, window (pi/3, 5pi/3)",
            [](std::string& detail) {
              const TorusLinkParams trefoil(2, 3);
              const PiScalar alpha = pi_times(Rational(1));
              const PiScalar vol = volume(trefoil, alpha);
              if (vol != pi_squared_times(Rational(1, 3))) {
                detail = "volume " + vol.to_text();
                return false;
              }
              if (std::fabs(vol.to_double() - 3.289868134) > 1e-9) {
                detail = "float volume " + conevol::format_sig12(vol.to_double());
                return false;
              }
              if (strand_length(trefoil, alpha) != pi_times(Rational(2))) {
                return false;
              }
              const AngleInterval window = existence_interval(trefoil);
              return window.lower == pi_times(Rational(1, 3)) &&
                     window.upper == pi_times(Rational(5, 3));
            });

  criterion(5, "two-bridge consistency: equal-angle helper matches volume(2,2p), p <= 100, exact",
            [](std::string& detail) {
              std::mt19937_64 rng(42);
              for (std::int64_t p = 1; p <= 100; ++p) {
                const PiScalar alpha = pi_times(
                    Rational(uniform_int(rng, 1, 1999), uniform_int(rng, 500, 1000)));
                const PiScalar helper = two_bridge_volume(p, alpha, alpha);
                const PiScalar direct =
                    volume(TorusLinkParams(2, 2 * p), alpha, true);
                if (helper != direct) {
                  detail = "p=" + std::to_string(p) + " alpha=" + alpha.to_text();
                  return false;
                }
              }
              return true;
            });

  criterion(6, "boundary degeneracy: volume, derivative and length vanish exactly at the lower bound",
            [](std::string& detail) {
              std::mt19937_64 rng(42);
              for (int i = 0; i < 100; ++i) {
                const TorusLinkParams params = random_params(rng, 50);
                const PiScalar bound = existence_interval(params).lower;
                if (volume(params, bound, true) != PiScalar::zero(2) ||
                    volume_derivative(params, bound, true) != PiScalar::zero(1) ||
                    strand_length(params, bound, true) != PiScalar::zero(1)) {
                  detail = "t(" + std::to_string(params.p()) + "," +
                           std::to_string(params.q()) + ")";
                  return false;
                }
              }
              return true;
            });

  criterion(7, "symmetry and normalization: (p,q) and (q,p) agree; window width = 4pi/q",
            [](std::string& detail) {
              std::mt19937_64 rng(42);
              for (int i = 0; i < 100; ++i) {
                const std::int64_t p = uniform_int(rng, 1, 50);
                const std::int64_t q = uniform_int(rng, 1, 50);
                const TorusLinkParams first(p, q);
                const TorusLinkParams second(q, p);
                if (!(first == second) || first.gcd() != second.gcd() ||
                    first.lcm() != second.lcm()) {
                  detail = "params mismatch";
                  return false;
                }
                const AngleInterval wa = existence_interval(first);
                const AngleInterval wb = existence_interval(second);
                if (wa.lower != wb.lower || wa.upper != wb.upper) {
                  detail = "interval mismatch";
                  return false;
                }
                if (wa.width() != pi_times(Rational(4, first.q()))) {
                  detail = "width " + wa.width().to_text();
                  return false;
                }
                const PiScalar alpha = random_alpha(rng, wa);
                if (volume(first, alpha) != volume(second, alpha)) {
                  detail = "volume mismatch";
                  return false;
                }
              }
              return true;
            });

  criterion(8, "cross-path float agreement: exact vs naive within 1e-12 relative, 1000 cases",
            [](std::string& detail) {
              std::mt19937_64 rng(42);
              double worst = 0.0;
              for (int i = 0; i < 1000; ++i) {
                const TorusLinkParams params = random_params(rng, 50);
                const PiScalar alpha =
                    random_alpha(rng, existence_interval(params));
                const double exact = volume(params, alpha).to_double();
                const double naive = conevol::naive_float_volume(
                    params.p(), params.q(), alpha.to_double());
                const double rel = std::fabs(exact - naive) /
                                   std::max(std::fabs(exact), std::fabs(naive));
                worst = std::max(worst, rel);
                if (rel > 1e-12) {
                  detail = "relative " + conevol::format_sig12(rel) + " at t(" +
                           std::to_string(params.p()) + "," +
                           std::to_string(params.q()) + ")";
                  return false;
                }
              }
              detail = "max relative " + conevol::format_sig12(worst);
              return true;
            });

  criterion(9, "CLI contract: sweep csv rows, verify exit status, golden info json",
            [](std::string& detail) {
              const CliResult sweep = run_cli("sweep 2 3 --samples 100 --format csv");
              if (sweep.exit_code != 0) {
                detail = "sweep exit " + std::to_string(sweep.exit_code);
                return false;
              }
              std::istringstream in(sweep.out);
              std::string line;
              std::getline(in, line);
              if (line !=
                  "alpha_exact,alpha_rad,volume_exact,volume,length_exact,length_per_component") {
                detail = "bad header: " + line;
                return false;
              }
              int rows = 0;
              double prev = 0.0;
              const double lo = 1.0471975511965976;  // pi/3
              const double hi = 5.235987755982988;   // 5pi/3
              while (std::getline(in, line)) {
                ++rows;
                std::istringstream cells(line);
                std::string alpha_exact, alpha_rad;
                std::getline(cells, alpha_exact, ',');
                std::getline(cells, alpha_rad, ',');
                const double alpha = std::strtod(alpha_rad.c_str(), nullptr);
                if (!(alpha > lo && alpha < hi && alpha > prev)) {
                  detail = "row " + std::to_string(rows) + " out of order or window";
                  return false;
                }
                prev = alpha;
              }
              if (rows != 100) {
                detail = std::to_string(rows) + " rows";
                return false;
              }

              const CliResult verify = run_cli("verify --trials 1000 --seed 42");
              if (verify.exit_code != 0) {
                detail = "verify exit " + std::to_string(verify.exit_code);
                return false;
              }

              std::ifstream golden_in(std::string(CONEVOL_GOLDEN_DIR) +
                                          "/info_4_6.json",
                                      std::ios::binary);
              if (!golden_in.good()) {
                detail = "golden file missing";
                return false;
              }
              std::ostringstream golden;
              golden << golden_in.rdbuf();
              const CliResult info = run_cli("info 4 6 --format json");
              if (info.out != golden.str()) {
                detail = "info json differs from golden bytes";
                return false;
              }
              return info.exit_code == 0;
            });

  std::printf("%s: %d/9 criteria passed\n", failures == 0 ? "OK" : "FAILED",
              9 - failures);
  return failures == 0 ? 0 : 1;
}
