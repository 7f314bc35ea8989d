#include "conevol/pi_scalar.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <ostream>
#include <utility>

#include "conevol/errors.hpp"

namespace conevol {

namespace mp = boost::multiprecision;

namespace {

std::string grade_name(int grade) {
  switch (grade) {
    case 0: return "1";
    case 1: return "pi";
    case 2: return "pi^2";
    default: return "pi^" + std::to_string(grade);
  }
}

}  // namespace

PiScalar::PiScalar(Rational coeff, int grade)
    : coeff_(std::move(coeff)), grade_(grade) {
  if (grade < 0 || grade > 2) {
    throw GradeError("pi grade " + std::to_string(grade) +
                     " outside supported range {0, 1, 2}");
  }
}

PiScalar operator+(const PiScalar& a, const PiScalar& b) {
  if (a.grade_ != b.grade_) {
    throw GradeError("cannot add " + grade_name(a.grade_) + "-graded and " +
                     grade_name(b.grade_) +
                     "-graded scalars; mixed grades signal a formula bug");
  }
  return PiScalar(a.coeff_ + b.coeff_, a.grade_);
}

PiScalar operator-(const PiScalar& a, const PiScalar& b) {
  if (a.grade_ != b.grade_) {
    throw GradeError("cannot subtract " + grade_name(b.grade_) +
                     "-graded from " + grade_name(a.grade_) +
                     "-graded scalar; mixed grades signal a formula bug");
  }
  return PiScalar(a.coeff_ - b.coeff_, a.grade_);
}

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
  const int grade = a.grade_ + b.grade_;
  if (grade > 2) {
    throw GradeError("product would have grade " + std::to_string(grade) +
                     "; nothing here needs pi^3");
  }
  return PiScalar(a.coeff_ * b.coeff_, grade);
}

bool operator<(const PiScalar& a, const PiScalar& b) {
  if (a.grade_ != b.grade_) {
    throw GradeError("ordering is defined only within one grade (" +
                     grade_name(a.grade_) + " vs " + grade_name(b.grade_) + ")");
  }
  return a.coeff_ < b.coeff_;
}

double PiScalar::to_double() const {
  static const mp::cpp_bin_float_50 pi =
      boost::math::constants::pi<mp::cpp_bin_float_50>();
  mp::cpp_bin_float_50 value =
      mp::cpp_bin_float_50(coeff_.numerator()) /
      mp::cpp_bin_float_50(coeff_.denominator());
  if (grade_ >= 1) value *= pi;
  if (grade_ == 2) value *= pi;
  const double result = value.convert_to<double>();
  if (!std::isfinite(result)) {
    throw Error("scalar does not fit in a double: " + to_text());
  }
  return result;
}

std::string PiScalar::to_text() const {
  if (coeff_.is_zero()) return "0";
  std::string text = coeff_.to_string();
  if (grade_ == 1) text += "*pi";
  if (grade_ == 2) text += "*pi^2";
  return text;
}

std::ostream& operator<<(std::ostream& os, const PiScalar& x) {
  return os << x.to_text();
}

}  // namespace conevol
