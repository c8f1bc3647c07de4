#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ivpoly/integer.hpp"

namespace ivpoly {

/// Univariate polynomial over the integers, coefficients ascending by degree.
/// The zero polynomial has no coefficients and degree kZeroDegree.
class IntPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Leading coefficient; zero for the zero polynomial.
  Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }
  Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  std::span<const Integer> coeffs() const { return coeffs_; }

  /// gcd of all coefficients, nonnegative; zero for the zero polynomial.
  Integer content() const;

  Integer operator()(const Integer& a) const;

  IntPoly pow(unsigned exponent) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly a) { return a *= s; }
  IntPoly operator-() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Divides every coefficient by `d`, which must divide the content.
  IntPoly exact_div(const Integer& d) const;

  /// Human-readable form in descending powers, e.g. "x^2-3x+1".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

struct DivMod {
  IntPoly quotient;
  IntPoly remainder;
};

/// g = q*h + r with deg r < deg h. Throws NonMonicDivisor unless h is monic.
DivMod monic_divmod(const IntPoly& g, const IntPoly& h);

}  // namespace ivpoly
