#include "conevol/sweep.hpp"

#include "conevol/errors.hpp"
#include "conevol/format.hpp"
#include "json_detail.hpp"

namespace conevol {

std::vector<SweepRow> run_sweep(const TorusLinkParams& params,
                                std::int64_t samples) {
  if (samples < 2) {
    throw ValidationError("sweep needs at least 2 samples, got " +
                          std::to_string(samples));
  }
  const AngleInterval window = existence_interval(params);
  const PiScalar base = window.effective_lower();
  const PiScalar span = window.upper - base;
  const PiScalar step = span * PiScalar(Rational(1, samples + 1), 0);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t i = 1; i <= samples; ++i) {
    const PiScalar alpha = base + step * PiScalar(Rational(i), 0);
    rows.push_back(SweepRow{alpha, volume(params, alpha),
                            strand_length(params, alpha)});
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "alpha_exact,alpha_rad,volume_exact,volume,length_exact,length_per_component\n";
  for (const SweepRow& row : rows) {
    out += row.alpha.to_text();
    out += ',';
    out += format_sig12(round_sig12(row.alpha.to_double()));
    out += ',';
    out += row.volume.to_text();
    out += ',';
    out += format_sig12(round_sig12(row.volume.to_double()));
    out += ',';
    out += row.length_per_component.to_text();
    out += ',';
    out += format_sig12(round_sig12(row.length_per_component.to_double()));
    out += '\n';
  }
  return out;
}

std::string sweep_to_json(const TorusLinkParams& params,
                          const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json j;
  j["params"] = detail::params_json(params);
  nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : rows) {
    nlohmann::ordered_json r;
    r["alpha"] = detail::scalar_json(row.alpha);
    r["volume"] = detail::scalar_json(row.volume);
    r["length_per_component"] = detail::scalar_json(row.length_per_component);
    out_rows.push_back(std::move(r));
  }
  j["rows"] = std::move(out_rows);
  return j.dump(2) + "\n";
}

}  // namespace conevol
