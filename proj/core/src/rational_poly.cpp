#include "ivpoly/rational_poly.hpp"

#include <ostream>

#include "ivpoly/error.hpp"

namespace ivpoly {

RationalPoly RationalPoly::canonicalize(const IntPoly& g, const Integer& d) {
  if (d == 0) throw Error(ErrorCode::kZeroDenominator, "denominator is zero");
  RationalPoly f;
  if (g.is_zero()) return f;
  Integer common = gcd(g.content(), d);
  if (d < 0) common = -common;
  f.num_ = g.exact_div(common);
  f.den_ = d / common;
  return f;
}

RationalPoly RationalPoly::from_coeffs(std::span<const Rational> coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.emplace_back(c.get_num() * (den / c.get_den()));
  return canonicalize(IntPoly(std::move(num)), den);
}

Rational RationalPoly::coeff(std::size_t i) const {
  Rational c(num_.coeff(i), den_);
  c.canonicalize();
  return c;
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  return RationalPoly::canonicalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  return RationalPoly::canonicalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  return RationalPoly::canonicalize(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalPoly::to_string() const {
  if (den_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const RationalPoly& f) {
  return os << f.to_string();
}

}  // namespace ivpoly
