#pragma once

#include <span>
#include <vector>

#include "ivpoly/integer.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

/// Polynomial over Z/dZ with least nonnegative coefficient representatives.
class ResiduePoly {
 public:
  /// Reduces every coefficient into [0, modulus). Throws BadModulus if modulus < 2.
  ResiduePoly(Integer modulus, std::span<const Integer> coeffs);
  ResiduePoly(Integer modulus, std::vector<Integer> coeffs)
      : ResiduePoly(std::move(modulus), std::span<const Integer>(coeffs)) {}

  const Integer& modulus() const { return modulus_; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  int degree() const {
    return coeffs_.empty() ? IntPoly::kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }

  /// The representative in Z[x] with coefficients in [0, modulus).
  IntPoly lift() const { return IntPoly(coeffs_); }

  friend ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b);
  friend ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b);
  friend bool operator==(const ResiduePoly& a, const ResiduePoly& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Integer modulus_;
  std::vector<Integer> coeffs_;
};

/// Coefficient-wise reduction of g into Z/dZ[x]. Throws BadModulus if d < 2.
ResiduePoly reduce_mod(const IntPoly& g, const Integer& d);

/// Chinese remaindering of the coefficients of x^0..x^{degree-1}, with the
/// leading coefficient fixed at 1. Returns the monic lift whose lower
/// coefficients lie in [0, prod(moduli)).
/// Throws NonCoprimeModuli, and NonMonic when an input has degree > `degree`
/// or a non-unit coefficient at x^degree.
IntPoly crt_coeffwise(std::span<const ResiduePoly> residues, int degree);

}  // namespace ivpoly
