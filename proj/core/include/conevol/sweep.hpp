#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conevol/invariants.hpp"

namespace conevol {

/// One row of a cone-angle sweep; all values exact, angle strictly inside
/// the existence window.
struct SweepRow {
  PiScalar alpha;
  PiScalar volume;
  PiScalar length_per_component;
};

/// Evaluate volume and per-component length at `samples` equally spaced
/// angles strictly inside the effective window: alpha_i = lower + i * width
/// / (samples + 1) for i = 1..samples (for p = 1 the positivity-clamped
/// lower end is used, since the raw bound is negative there).
/// Throws ValidationError when samples < 2.
std::vector<SweepRow> run_sweep(const TorusLinkParams& params,
                                std::int64_t samples);

/// Header: alpha_exact,alpha_rad,volume_exact,volume,length_exact,length_per_component
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

std::string sweep_to_json(const TorusLinkParams& params,
                          const std::vector<SweepRow>& rows);

}  // namespace conevol
