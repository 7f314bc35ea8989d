// conevol: exact spherical-geometry invariants of torus knot/link
// cone-manifolds, computed in rational multiples of pi and pi^2.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "conevol/angle.hpp"
#include "conevol/errors.hpp"
#include "conevol/format.hpp"
#include "conevol/invariants.hpp"
#include "conevol/sweep.hpp"
#include "conevol/torus_link.hpp"
#include "conevol/verify.hpp"

namespace {

using conevol::AngleExpr;
using conevol::AngleInterval;
using conevol::AngleMode;
using conevol::InvariantReport;
using conevol::PiScalar;
using conevol::SweepRow;
using conevol::TorusLinkParams;
using conevol::VerificationConfig;
using conevol::VerificationReport;
using conevol::format_sig12;
using conevol::round_sig12;

// Human tables may use the glyph; machine formats always spell "pi".
std::string pretty(const PiScalar& x) {
  std::string text = x.to_text();
  if (auto pos = text.find("*pi^2"); pos != std::string::npos) {
    text.replace(pos, 5, "·π²");
  } else if (auto pos = text.find("*pi"); pos != std::string::npos) {
    text.replace(pos, 3, "·π");
  }
  return text;
}

std::string pretty_with_float(const PiScalar& x) {
  if (x.is_zero()) return "0";
  return pretty(x) + " ≈ " + format_sig12(round_sig12(x.to_double()));
}

// CONEVOL_FORMAT sets the default; values a command cannot honor (or typos)
// fall back to the human table. An explicit --format is still validated.
std::string default_format(const std::vector<std::string>& allowed) {
  const char* env = std::getenv("CONEVOL_FORMAT");
  if (env != nullptr) {
    for (const std::string& candidate : allowed) {
      if (candidate == env) return candidate;
    }
  }
  return "human";
}

nlohmann::ordered_json scalar_json(const PiScalar& x) {
  nlohmann::ordered_json j;
  j["coeff"] = x.coeff().to_string();
  j["grade"] = x.grade();
  j["text"] = x.to_text();
  j["float"] = round_sig12(x.to_double());
  return j;
}

void print_params_human(const TorusLinkParams& params, std::ostream& os) {
  os << (params.is_knot() ? "torus knot t(" : "torus link t(") << params.p()
     << ", " << params.q() << ")";
  if (!params.is_knot()) os << ", " << params.components() << " components";
  os << "\n";
  if (params.is_degenerate_unknot()) {
    os << "  note: unknot (degenerate singular set)\n";
  }
  if (params.normalized_swap()) {
    os << "  note: parameters swapped to enforce p <= q\n";
  }
  os << "  gcd " << params.gcd() << ", lcm " << params.lcm() << "\n";
}

void print_window_human(const AngleInterval& window, std::ostream& os) {
  os << "  spherical window: (" << pretty(window.lower) << ", "
     << pretty(window.upper) << ") ≈ ("
     << format_sig12(round_sig12(window.lower.to_double())) << ", "
     << format_sig12(round_sig12(window.upper.to_double()))
     << ") rad, width " << pretty(window.width()) << "\n";
  if (window.effective_lower() != window.lower) {
    os << "  positivity clamp: cone angles must be positive, effective window ("
       << pretty(window.effective_lower()) << ", " << pretty(window.upper)
       << ")\n";
  }
}

void note_approximation(const AngleExpr& angle, std::ostream& os) {
  if (angle.mode != AngleMode::radians_float) return;
  os << "  note: " << format_sig12(angle.input_radians)
     << " rad snapped to nearest pi-rational " << angle.value.to_text()
     << " ≈ " << format_sig12(round_sig12(angle.value.to_double()))
     << " rad (denominator <= 1000000)\n";
}

int cmd_info(std::int64_t p, std::int64_t q, const std::string& format) {
  const TorusLinkParams params(p, q);
  const AngleInterval window = existence_interval(params);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["params"] = nlohmann::ordered_json::parse(to_json_string(params));
    j["knot"] = params.is_knot();
    j["degenerate_unknot"] = params.is_degenerate_unknot();
    nlohmann::ordered_json w;
    w["lower"] = scalar_json(window.lower);
    w["upper"] = scalar_json(window.upper);
    w["width"] = scalar_json(window.width());
    w["effective_lower"] = scalar_json(window.effective_lower());
    j["interval"] = w;
    std::cout << j.dump(2) << "\n";
  } else {
    print_params_human(params, std::cout);
    print_window_human(window, std::cout);
  }
  return 0;
}

int cmd_report(std::int64_t p, std::int64_t q, const std::string& alpha_text,
               bool force, const std::string& format, bool emphasize_length) {
  const TorusLinkParams params(p, q);
  const AngleExpr angle = conevol::parse_angle(alpha_text);
  const InvariantReport report = make_report(params, angle.value, force);
  if (format == "json") {
    note_approximation(angle, std::cerr);
    std::cout << to_json_string(report);
    return 0;
  }
  print_params_human(params, std::cout);
  print_window_human(report.interval, std::cout);
  note_approximation(angle, std::cout);
  std::cout << "  alpha = " << pretty_with_float(report.alpha) << " rad\n";
  std::cout << "  asserted spherical: "
            << (report.asserted_spherical ? "yes" : "no") << "\n";
  if (report.forced) {
    std::cout << "  forced: values below are the analytic continuation, not a "
                 "geometric claim\n";
  }
  if (emphasize_length) {
    std::cout << "  length per component: "
              << pretty_with_float(*report.length_per_component) << "\n";
    std::cout << "  length total:         "
              << pretty_with_float(*report.length_total) << "\n";
    std::cout << "  volume:               " << pretty_with_float(*report.volume)
              << "\n";
  } else {
    std::cout << "  volume:               " << pretty_with_float(*report.volume)
              << "\n";
    std::cout << "  length per component: "
              << pretty_with_float(*report.length_per_component) << "\n";
    std::cout << "  length total:         "
              << pretty_with_float(*report.length_total) << "\n";
  }
  std::cout << "  covering residual:    " << report.covering_residual.to_text()
            << "\n";
  return 0;
}

int cmd_sweep(std::int64_t p, std::int64_t q, std::int64_t samples,
              const std::string& format) {
  const TorusLinkParams params(p, q);
  const std::vector<SweepRow> rows = conevol::run_sweep(params, samples);
  if (format == "csv") {
    std::cout << conevol::sweep_to_csv(rows);
  } else if (format == "json") {
    std::cout << conevol::sweep_to_json(params, rows);
  } else {
    print_params_human(params, std::cout);
    std::printf("  %-14s %-16s %-16s %-16s %-16s %-16s\n", "alpha", "alpha_rad",
                "volume", "volume_f", "length", "length_f");
    for (const SweepRow& row : rows) {
      std::printf("  %-14s %-16s %-16s %-16s %-16s %-16s\n",
                  pretty(row.alpha).c_str(),
                  format_sig12(round_sig12(row.alpha.to_double())).c_str(),
                  pretty(row.volume).c_str(),
                  format_sig12(round_sig12(row.volume.to_double())).c_str(),
                  pretty(row.length_per_component).c_str(),
                  format_sig12(round_sig12(row.length_per_component.to_double())).c_str());
    }
  }
  return 0;
}

int cmd_table(std::int64_t p_max, std::int64_t q_max,
              const std::string& alpha_text, const std::string& format) {
  const AngleExpr angle = conevol::parse_angle(alpha_text);
  // Cell (p, q) carries the volume float when the structure is asserted
  // there, otherwise it stays blank.
  std::vector<std::vector<double>> grid(
      static_cast<std::size_t>(p_max),
      std::vector<double>(static_cast<std::size_t>(q_max)));
  std::vector<std::vector<bool>> asserted(
      static_cast<std::size_t>(p_max),
      std::vector<bool>(static_cast<std::size_t>(q_max), false));
  for (std::int64_t p = 1; p <= p_max; ++p) {
    for (std::int64_t q = 1; q <= q_max; ++q) {
      const TorusLinkParams params(p, q);
      if (!admits_spherical(params, angle.value)) continue;
      asserted[p - 1][q - 1] = true;
      grid[p - 1][q - 1] = round_sig12(volume(params, angle.value).to_double());
    }
  }
  if (format == "json") {
    note_approximation(angle, std::cerr);
    nlohmann::ordered_json j;
    j["alpha"] = scalar_json(angle.value);
    j["p_max"] = p_max;
    j["q_max"] = q_max;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::int64_t p = 1; p <= p_max; ++p) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::int64_t q = 1; q <= q_max; ++q) {
        if (asserted[p - 1][q - 1]) {
          row.push_back(grid[p - 1][q - 1]);
        } else {
          row.push_back(nullptr);
        }
      }
      rows.push_back(std::move(row));
    }
    j["volumes"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "p";
    for (std::int64_t q = 1; q <= q_max; ++q) std::cout << ",q=" << q;
    std::cout << "\n";
    for (std::int64_t p = 1; p <= p_max; ++p) {
      std::cout << p;
      for (std::int64_t q = 1; q <= q_max; ++q) {
        std::cout << ",";
        if (asserted[p - 1][q - 1]) std::cout << format_sig12(grid[p - 1][q - 1]);
      }
      std::cout << "\n";
    }
  } else {
    std::cout << "volume at alpha = " << pretty_with_float(angle.value)
              << " rad (blank: no spherical structure asserted)\n";
    note_approximation(angle, std::cout);
    std::printf("  %4s", "p\\q");
    for (std::int64_t q = 1; q <= q_max; ++q) {
      std::printf(" %14lld", static_cast<long long>(q));
    }
    std::printf("\n");
    for (std::int64_t p = 1; p <= p_max; ++p) {
      std::printf("  %4lld", static_cast<long long>(p));
      for (std::int64_t q = 1; q <= q_max; ++q) {
        if (asserted[p - 1][q - 1]) {
          std::printf(" %14s", format_sig12(grid[p - 1][q - 1]).c_str());
        } else {
          std::printf(" %14s", "");
        }
      }
      std::printf("\n");
    }
  }
  return 0;
}

int cmd_verify(const VerificationConfig& config, const std::string& format) {
  const VerificationReport report = conevol::run_identity_suite(config);
  if (format == "json") {
    std::cout << to_json_string(report);
  } else {
    std::cout << summary_table(report);
  }
  return report.pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact spherical-structure invariants of torus knot and link "
      "cone-manifolds"};
  app.require_subcommand(1);

  const std::vector<std::string> table_formats{"human", "json", "csv"};
  const std::vector<std::string> plain_formats{"human", "json"};

  std::int64_t p = 0, q = 0, samples = 0, p_max = 0, q_max = 0;
  std::string alpha_text, format;
  bool force = false;
  VerificationConfig config;
  int rc = 0;

  // `format` stays empty unless the active subcommand's --format was given;
  // the effective value is resolved inside the callback so one command's
  // default can never leak into another's.
  const auto add_format = [&](CLI::App* cmd, const std::vector<std::string>& allowed) {
    cmd->add_option("--format", format,
                    "output format (default: human, or CONEVOL_FORMAT)")
        ->check(CLI::IsMember(allowed));
  };
  const auto effective_format = [&](const std::vector<std::string>& allowed) {
    return format.empty() ? default_format(allowed) : format;
  };

  CLI::App* info = app.add_subcommand("info", "parameters and existence window");
  info->add_option("P", p, "first parameter")->required();
  info->add_option("Q", q, "second parameter")->required();
  add_format(info, plain_formats);
  info->callback([&] { rc = cmd_info(p, q, effective_format(plain_formats)); });

  CLI::App* vol = app.add_subcommand("volume", "cone-manifold volume at a cone angle");
  vol->add_option("P", p)->required();
  vol->add_option("Q", q)->required();
  vol->add_option("--alpha", alpha_text, "cone angle, e.g. 2/3*pi or 2.094")->required();
  vol->add_flag("--force", force, "evaluate outside the window (analytic continuation)");
  add_format(vol, plain_formats);
  vol->callback([&] { rc = cmd_report(p, q, alpha_text, force, effective_format(plain_formats), false); });

  CLI::App* len = app.add_subcommand("length", "singular strand length at a cone angle");
  len->add_option("P", p)->required();
  len->add_option("Q", q)->required();
  len->add_option("--alpha", alpha_text, "cone angle, e.g. 2/3*pi or 2.094")->required();
  len->add_flag("--force", force, "evaluate outside the window (analytic continuation)");
  add_format(len, plain_formats);
  len->callback([&] { rc = cmd_report(p, q, alpha_text, force, effective_format(plain_formats), true); });

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate the window interior");
  sweep->add_option("P", p)->required();
  sweep->add_option("Q", q)->required();
  sweep->add_option("--samples", samples, "number of interior samples (>= 2)")->required();
  add_format(sweep, table_formats);
  sweep->callback([&] { rc = cmd_sweep(p, q, samples, effective_format(table_formats)); });

  CLI::App* table = app.add_subcommand("table", "volume grid over p and q at one angle");
  table->add_option("--p-max", p_max, "rows: p = 1..A")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--q-max", q_max, "columns: q = 1..B")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--alpha", alpha_text, "cone angle")->required();
  add_format(table, table_formats);
  table->callback([&] { rc = cmd_table(p_max, q_max, alpha_text, effective_format(table_formats)); });

  CLI::App* verify = app.add_subcommand("verify", "run the randomized identity suite");
  verify->add_option("--trials", config.trials, "number of random cases");
  verify->add_option("--seed", config.seed, "PRNG seed");
  verify->add_option("--p-max", config.p_max, "largest p sampled");
  verify->add_option("--q-max", config.q_max, "largest q sampled");
  add_format(verify, plain_formats);
  verify->callback([&] { rc = cmd_verify(config, effective_format(plain_formats)); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const conevol::NotAssertedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const conevol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
