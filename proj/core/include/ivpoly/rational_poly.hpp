#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>

#include "ivpoly/integer.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

/// A polynomial in Q[x] held as numerator/denominator with the numerator in
/// Z[x]. Always canonical: denominator >= 1, gcd(content, denominator) = 1,
/// and the zero polynomial has denominator 1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(IntPoly numerator) : num_(std::move(numerator)) {}

  /// Throws ZeroDenominator when d == 0.
  static RationalPoly canonicalize(const IntPoly& g, const Integer& d);
  /// From rational coefficients, ascending by degree.
  static RationalPoly from_coeffs(std::span<const Rational> coeffs);

  const IntPoly& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  int degree() const { return num_.degree(); }

  /// Coefficient of x^i as a reduced rational.
  Rational coeff(std::size_t i) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// "(x^2-x)/2", or just the numerator when the denominator is 1.
  std::string to_string() const;

 private:
  IntPoly num_;
  Integer den_ = 1;
};

inline RationalPoly canonicalize(const IntPoly& g, const Integer& d) {
  return RationalPoly::canonicalize(g, d);
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& f);

}  // namespace ivpoly
