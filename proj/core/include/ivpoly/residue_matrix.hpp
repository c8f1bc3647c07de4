#pragma once

#include <cstddef>
#include <vector>

#include "ivpoly/integer.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/residue_poly.hpp"

namespace ivpoly {

/// n x n matrix over Z/dZ with entries in [0, d).
class ResidueMatrix {
 public:
  /// Entry-wise reduction. Throws BadModulus if d < 2.
  ResidueMatrix(const IntMatrix& a, const Integer& modulus);

  static ResidueMatrix identity(std::size_t n, const Integer& modulus);

  std::size_t size() const { return n_; }
  const Integer& modulus() const { return modulus_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const;
  IntMatrix lift() const;

  friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
  friend ResidueMatrix eval_poly_at_matrix(const ResiduePoly& g, const ResidueMatrix& a);
  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
    return a.modulus_ == b.modulus_ && a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  ResidueMatrix(std::size_t n, Integer modulus);

  std::size_t n_ = 0;
  Integer modulus_;
  std::vector<Integer> data_;
};

/// Horner evaluation of g at A over Z/dZ; g and A must share the modulus.
ResidueMatrix eval_poly_at_matrix(const ResiduePoly& g, const ResidueMatrix& a);

}  // namespace ivpoly
