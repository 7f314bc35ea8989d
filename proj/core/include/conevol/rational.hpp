#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace conevol {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always held in canonical form:
/// denominator > 0, gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: integers embed implicitly
  Rational(BigInt numerator, BigInt denominator);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_zero() const { return value_.is_zero(); }
  int sign() const { return value_.sign(); }
  bool is_negative() const { return value_.sign() < 0; }

  /// Largest integer <= this value.
  BigInt floor() const;
  /// Smallest integer >= this value.
  BigInt ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // ValidationError on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  /// Nearest double, rounded through a 50-digit intermediate so the
  /// conversion is monotone and deterministic. Throws Error when the value
  /// does not fit in double range.
  double to_double() const;

  /// Canonical text: "a/b", or just "a" when the denominator is 1.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  boost::multiprecision::cpp_rational value_;
};

}  // namespace conevol
