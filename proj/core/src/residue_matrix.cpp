#include "ivpoly/residue_matrix.hpp"

#include "ivpoly/error.hpp"

namespace ivpoly {

ResidueMatrix::ResidueMatrix(std::size_t n, Integer modulus)
    : n_(n), modulus_(std::move(modulus)), data_(n * n, Integer(0)) {
  if (modulus_ < 2) {
    throw Error(ErrorCode::kBadModulus, "modulus must be >= 2, got " + modulus_.get_str());
  }
}

ResidueMatrix::ResidueMatrix(const IntMatrix& a, const Integer& modulus)
    : ResidueMatrix(a.size(), modulus) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) data_[i * n_ + j] = mod_floor(a(i, j), modulus_);
}

ResidueMatrix ResidueMatrix::identity(std::size_t n, const Integer& modulus) {
  ResidueMatrix m(n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

bool ResidueMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (v != 0) return false;
  }
  return true;
}

IntMatrix ResidueMatrix::lift() const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = data_[i * n_ + j];
  return out;
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::kDimensionMismatch, "matrix dimensions differ");
  if (a.modulus_ != b.modulus_) throw Error(ErrorCode::kBadModulus, "matrix moduli differ");
  const std::size_t n = a.n_;
  ResidueMatrix c(n, a.modulus_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a.data_[i * n + k] * b.data_[k * n + j];
      c.data_[i * n + j] = mod_floor(s, a.modulus_);
    }
  }
  return c;
}

ResidueMatrix eval_poly_at_matrix(const ResiduePoly& g, const ResidueMatrix& a) {
  if (g.modulus() != a.modulus()) {
    throw Error(ErrorCode::kBadModulus, "polynomial and matrix moduli differ");
  }
  const std::size_t n = a.size();
  ResidueMatrix acc(n, a.modulus());
  auto coeffs = g.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) {
      Integer& diag = acc.data_[i * n + i];
      diag = mod_floor(diag + *it, a.modulus());
    }
  }
  return acc;
}

}  // namespace ivpoly
