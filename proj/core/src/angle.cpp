#include "conevol/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "conevol/errors.hpp"

namespace conevol {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::int64_t parse_int(std::string_view digits, std::size_t original_pos) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("integer out of range", original_pos);
  }
  return value;
}

}  // namespace

AngleExpr parse_angle(std::string_view text) {
  // Whitespace-insensitive: scan once, keeping original positions for errors.
  std::string stripped;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    stripped.push_back(text[i]);
    origin.push_back(i);
  }
  const auto pos_of = [&](std::size_t stripped_index) {
    return stripped_index < origin.size() ? origin[stripped_index] : text.size();
  };
  if (stripped.empty()) throw ParseError("empty angle expression", 0);

  std::size_t cursor = 0;
  int sign = 1;
  if (stripped[cursor] == '+' || stripped[cursor] == '-') {
    if (stripped[cursor] == '-') sign = -1;
    ++cursor;
  }
  std::string body = stripped.substr(cursor);

  const auto lower = [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  };
  const bool has_pi = body.size() >= 2 &&
                      lower(body[body.size() - 2]) == 'p' &&
                      lower(body[body.size() - 1]) == 'i';

  if (has_pi) {
    std::string coeff_text = body.substr(0, body.size() - 2);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();

    Rational coeff(1);
    if (!coeff_text.empty()) {
      const std::size_t slash = coeff_text.find('/');
      if (slash == std::string::npos) {
        if (!all_digits(coeff_text)) {
          std::size_t bad = 0;
          while (bad < coeff_text.size() &&
                 std::isdigit(static_cast<unsigned char>(coeff_text[bad]))) {
            ++bad;
          }
          throw ParseError("expected integer coefficient before 'pi'",
                           pos_of(cursor + bad));
        }
        coeff = Rational(parse_int(coeff_text, pos_of(cursor)));
      } else {
        const std::string num = coeff_text.substr(0, slash);
        const std::string den = coeff_text.substr(slash + 1);
        if (!all_digits(num)) {
          throw ParseError("expected integer numerator", pos_of(cursor));
        }
        if (!all_digits(den)) {
          throw ParseError("expected integer denominator after '/'",
                           pos_of(cursor + slash + 1));
        }
        const std::int64_t den_value = parse_int(den, pos_of(cursor + slash + 1));
        if (den_value == 0) {
          throw ParseError("zero denominator in angle coefficient",
                           pos_of(cursor + slash + 1));
        }
        coeff = Rational(parse_int(num, pos_of(cursor)), den_value);
      }
    }
    if (sign < 0) coeff = -coeff;
    return AngleExpr{std::string(text), pi_times(coeff), AngleMode::pi_rational, 0.0};
  }

  // Plain number: radians.
  double radians = 0.0;
  const auto [ptr, ec] =
      std::from_chars(body.data(), body.data() + body.size(), radians);
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    const std::size_t bad = cursor + static_cast<std::size_t>(ptr - body.data());
    throw ParseError("malformed angle expression", pos_of(bad));
  }
  if (!std::isfinite(radians) || std::fabs(radians) > 1e9) {
    throw ParseError("angle in radians out of supported range", pos_of(cursor));
  }
  radians *= sign;
  const Rational snapped = nearest_pi_fraction(radians, kMaxApproxDenominator);
  return AngleExpr{std::string(text), pi_times(snapped), AngleMode::radians_float,
                   radians};
}

Rational nearest_pi_fraction(double radians, std::int64_t max_den) {
  if (max_den < 1 || max_den > 1000000000) {
    throw ValidationError("max_den must lie in [1, 1e9]");
  }
  // keeps every continued-fraction numerator within int64
  if (!std::isfinite(radians) || std::fabs(radians) > 1e9) {
    throw ValidationError("value out of range for a pi-rational approximation");
  }
  const long double x =
      static_cast<long double>(radians) / std::numbers::pi_v<long double>;
  const bool negative = x < 0;
  long double ax = negative ? -x : x;

  // Continued-fraction convergents h/k of ax, then the last semiconvergent
  // that still fits max_den; the nearer of the two is the best bounded
  // approximation.
  std::int64_t h_prev = 1, k_prev = 0;
  std::int64_t h = static_cast<std::int64_t>(std::floor(ax)), k = 1;
  long double frac = ax - std::floor(ax);

  const auto distance = [&](std::int64_t num, std::int64_t den) {
    return std::fabs(ax - static_cast<long double>(num) / den);
  };

  for (int round = 0; round < 64 && frac > 0; ++round) {
    const long double inv = 1.0L / frac;
    if (inv > 9e15L) break;  // beyond double resolution; current h/k is exact
    const std::int64_t a = static_cast<std::int64_t>(std::floor(inv));
    if (a < 1) break;
    if (a > (max_den - k_prev) / k) {
      const std::int64_t t = (max_den - k_prev) / k;
      if (t >= 1) {
        const std::int64_t semi_h = t * h + h_prev;
        const std::int64_t semi_k = t * k + k_prev;
        if (distance(semi_h, semi_k) < distance(h, k)) {
          h = semi_h;
          k = semi_k;
        }
      }
      break;
    }
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = inv - static_cast<long double>(a);
  }
  return Rational(negative ? -h : h, k);
}

}  // namespace conevol
