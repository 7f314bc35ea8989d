#pragma once

#include <iosfwd>
#include <string>

#include "conevol/rational.hpp"

namespace conevol {

/// Exact scalar of the form coeff * pi^grade with grade in {0, 1, 2}.
///
/// Grade 1 carries angles and lengths (radians), grade 2 carries volumes.
/// Addition is defined only within a grade; multiplication adds grades and
/// must stay within {0, 1, 2}. A zero coefficient keeps its grade, so a zero
/// angle and a zero volume remain distinguishable.
class PiScalar {
public:
  PiScalar() : coeff_(0), grade_(0) {}
  PiScalar(Rational coeff, int grade);  // GradeError unless grade in {0,1,2}

  static PiScalar zero(int grade) { return PiScalar(Rational(0), grade); }

  const Rational& coeff() const noexcept { return coeff_; }
  int grade() const noexcept { return grade_; }
  bool is_zero() const { return coeff_.is_zero(); }

  PiScalar operator-() const { return PiScalar(-coeff_, grade_); }
  /// Sum/difference of equal grades; GradeError otherwise.
  friend PiScalar operator+(const PiScalar& a, const PiScalar& b);
  friend PiScalar operator-(const PiScalar& a, const PiScalar& b);
  /// Product; grades add, GradeError if the result would exceed grade 2.
  friend PiScalar operator*(const PiScalar& a, const PiScalar& b);
  /// Shorthand for self-product; defined for grades 0 and 1.
  PiScalar square() const { return *this * *this; }

  /// Structural equality: same grade and same coefficient. Scalars of
  /// different grade are never equal (zero keeps its grade).
  friend bool operator==(const PiScalar& a, const PiScalar& b) {
    return a.grade_ == b.grade_ && a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }

  /// Coefficient order within one grade; GradeError across grades.
  friend bool operator<(const PiScalar& a, const PiScalar& b);
  friend bool operator>(const PiScalar& a, const PiScalar& b) { return b < a; }
  friend bool operator<=(const PiScalar& a, const PiScalar& b) { return !(b < a); }
  friend bool operator>=(const PiScalar& a, const PiScalar& b) { return !(a < b); }

  /// coeff * pi^grade as the nearest double (radians for grade 1, cubic
  /// units for grade 2). Deterministic; throws Error on overflow.
  double to_double() const;

  /// Canonical text: "0", "a/b", "a/b*pi" or "a/b*pi^2"; integer
  /// coefficients drop the "/1".
  std::string to_text() const;

  friend std::ostream& operator<<(std::ostream& os, const PiScalar& x);

private:
  Rational coeff_;
  int grade_;
};

/// r * pi (grade 1) — angles and lengths.
inline PiScalar pi_times(Rational r) { return PiScalar(std::move(r), 1); }
/// r * pi^2 (grade 2) — volumes.
inline PiScalar pi_squared_times(Rational r) { return PiScalar(std::move(r), 2); }

}  // namespace conevol
