#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ivpoly/error.hpp"
#include "ivpoly/integer.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

/// Dense n x n matrix, row-major. n = 0 is the empty matrix (neutral for
/// block_diag); everything else expects n >= 1.
template <class Scalar>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, Scalar(0)) {}
  SquareMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : SquareMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) {
        throw Error(ErrorCode::kDimensionMismatch, "matrix rows must have length n");
      }
      std::size_t j = 0;
      for (long v : row) (*this)(i, j++) = Scalar(v);
      ++i;
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix unit with a single 1 at (i, j), zero-based.
  static SquareMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    SquareMatrix m(n);
    m(i, j) = 1;
    return m;
  }

  std::size_t size() const { return n_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (v != 0) return false;
    }
    return true;
  }

  Scalar trace() const {
    Scalar t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(const Scalar& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const Scalar& s) { return a *= s; }
  friend SquareMatrix operator*(const Scalar& s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.check_same(b);
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

  /// Row-major text, rows separated by " ; ".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i > 0) s += " ; ";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j > 0) s += ' ';
        s += (*this)(i, j).get_str();
      }
    }
    return s;
  }

 private:
  void check_same(const SquareMatrix& o) const {
    if (n_ != o.n_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "matrix dimensions " + std::to_string(n_) + " and " +
                      std::to_string(o.n_) + " differ");
    }
  }

  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = SquareMatrix<Integer>;
using RatMatrix = SquareMatrix<Rational>;

/// Companion matrix of a monic h of degree n >= 1: ones on the subdiagonal,
/// last column (-a_0, ..., -a_{n-1}). Throws NonMonic or DegreeZero.
IntMatrix companion(const IntPoly& h);

/// det(xI - A), computed by the Faddeev-LeVerrier recurrence.
IntPoly char_poly(const IntMatrix& a);

/// Horner evaluation g(A); the constant term contributes g_0 * I.
IntMatrix eval_poly_at_matrix(const IntPoly& g, const IntMatrix& a);

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

RatMatrix to_rational(const IntMatrix& a);

/// The integer matrix with the same entries, or nullopt if any entry is
/// non-integral.
std::optional<IntMatrix> to_integer(const RatMatrix& a);

}  // namespace ivpoly
