#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "conevol/pi_scalar.hpp"

namespace conevol {

enum class AngleMode {
  pi_rational,    // exact input such as "2/3*pi"
  radians_float,  // plain number, interpreted as radians and approximated
};

/// A parsed cone-angle expression. In radians_float mode `value` is the
/// nearest rational multiple of pi with denominator <= kMaxApproxDenominator,
/// and `input_radians` keeps the number as given for reporting.
struct AngleExpr {
  std::string raw;
  PiScalar value;  // grade 1
  AngleMode mode = AngleMode::pi_rational;
  double input_radians = 0.0;
};

/// Largest denominator used when snapping a radian value onto a rational
/// multiple of pi.
inline constexpr std::int64_t kMaxApproxDenominator = 1000000;

/// Grammar: [sign] (INT['/'INT])? ['*']? 'pi' | FLOAT. Whitespace is ignored
/// everywhere and 'pi' is case-insensitive. Forms mentioning pi are exact;
/// a bare number is radians. Throws ParseError (with position) on malformed
/// text or a zero denominator.
AngleExpr parse_angle(std::string_view text);

/// Best rational approximation of radians/pi with denominator <= max_den
/// (continued fractions, including the final semiconvergent).
Rational nearest_pi_fraction(double radians, std::int64_t max_den);

}  // namespace conevol
