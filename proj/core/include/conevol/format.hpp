#pragma once

#include <string>

namespace conevol {

/// Render a double with 12 significant digits ("%.12g").
std::string format_sig12(double value);

/// The double nearest to the 12-significant-digit rendering of value.
/// All emitted floats (CSV, JSON, tables) pass through this, so the same
/// quantity prints as the same number in every format.
double round_sig12(double value);

}  // namespace conevol
