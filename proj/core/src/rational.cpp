#include "conevol/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <ostream>
#include <utility>

#include "conevol/errors.hpp"

namespace conevol {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator.is_zero()) {
    throw ValidationError("rational with zero denominator: " +
                          numerator.str() + "/0");
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = mp::cpp_rational(std::move(numerator), std::move(denominator));
}

BigInt Rational::floor() const {
  BigInt quot = numerator() / denominator();
  if (is_negative() && quot * denominator() != numerator()) --quot;
  return quot;
}

BigInt Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw ValidationError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

double Rational::to_double() const {
  mp::cpp_bin_float_50 num(numerator());
  mp::cpp_bin_float_50 den(denominator());
  const double result = (num / den).convert_to<double>();
  if (!std::isfinite(result)) {
    throw Error("rational does not fit in a double: " + to_string());
  }
  return result;
}

std::string Rational::to_string() const { return value_.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.value_;
}

}  // namespace conevol
