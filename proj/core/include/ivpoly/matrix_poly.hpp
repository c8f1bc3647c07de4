#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ivpoly/matrix.hpp"
#include "ivpoly/membership.hpp"
#include "ivpoly/rational_poly.hpp"

namespace ivpoly {

/// Polynomial with n x n rational matrix coefficients, an element of M_n(Q)[x].
/// x is central; the coefficients do not commute with each other.
class MatCoeffPoly {
 public:
  explicit MatCoeffPoly(std::size_t n) : n_(n) {}
  /// Throws DimensionMismatch if a coefficient is not n x n.
  MatCoeffPoly(std::size_t n, std::vector<RatMatrix> coeffs);

  /// f(x) * I_n.
  static MatCoeffPoly scalar(const RationalPoly& f, std::size_t n);
  static MatCoeffPoly constant(const RatMatrix& a);

  std::size_t size() const { return n_; }
  std::span<const RatMatrix> coeffs() const { return coeffs_; }
  int degree() const {
    return coeffs_.empty() ? IntPoly::kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }

  friend MatCoeffPoly operator+(const MatCoeffPoly& a, const MatCoeffPoly& b);
  friend MatCoeffPoly operator*(const MatCoeffPoly& a, const MatCoeffPoly& b);
  friend bool operator==(const MatCoeffPoly& a, const MatCoeffPoly& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::size_t n_;
  std::vector<RatMatrix> coeffs_;
};

/// Coefficient convolution (F*G)_m = sum_k A_k B_{m-k}. Throws DimensionMismatch.
MatCoeffPoly mat_poly_mul(const MatCoeffPoly& f, const MatCoeffPoly& g);

/// n x n matrix of rational polynomials, an element of M_n(Q[x]).
class MatOfPoly {
 public:
  explicit MatOfPoly(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const { return n_; }
  RationalPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const RationalPoly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  friend MatOfPoly operator+(const MatOfPoly& a, const MatOfPoly& b);
  friend MatOfPoly operator*(const MatOfPoly& a, const MatOfPoly& b);
  friend bool operator==(const MatOfPoly& a, const MatOfPoly& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t n_;
  std::vector<RationalPoly> entries_;
};

/// sum_k (a_ij^(k)) x^k  ->  (sum_k a_ij^(k) x^k)_ij
MatOfPoly phi(const MatCoeffPoly& f);
MatCoeffPoly phi_inv(const MatOfPoly& m);

/// sum_k A_k C^k: coefficients on the left, powers of C on the right.
/// This is not multiplicative in F.
RatMatrix eval_matcoeff_at_matrix(const MatCoeffPoly& f, const IntMatrix& c);

/// sum_i e_ij F e_ki computed in M_n(Q)[x]; equals c_jk(x) I_n. Indices are 1-based.
MatCoeffPoly sandwich_sum(const MatCoeffPoly& f, std::size_t j, std::size_t k);

/// Entry c_jk(x) of phi(F) (1-based), cross-checked against sandwich_sum.
/// Throws IndexOutOfRange.
RationalPoly entry_scalarize(const MatCoeffPoly& f, std::size_t j, std::size_t k);

struct MatrixMembershipReport {
  bool member = true;
  /// First failing entry in row-major order, 1-based.
  std::optional<std::pair<std::size_t, std::size_t>> failing_entry;
  /// Scalar verdict for the failing entry.
  std::optional<MembershipVerdict> entry_verdict;
  /// Residue cases examined across all entries.
  std::uint64_t cases = 0;
};

/// F in Int[M_n(Z)] iff every entry of phi(F) is in Int(M_n(Z)).
MatrixMembershipReport member_matrix_poly(const MatCoeffPoly& f,
                                          const MembershipOptions& options = {});

struct IntegralityReport {
  bool integral = true;
  std::uint64_t trials = 0;
  std::optional<IntMatrix> failing_matrix;
  std::optional<RatMatrix> value;
};

struct SampleOptions {
  std::uint64_t seed = 0x5eed;
  long entry_bound = 10;  // entries drawn from [-bound, bound]
};

/// Evaluates F at random integer matrices and stops at the first non-integral value.
IntegralityReport sample_check_integrality(const MatCoeffPoly& f, std::uint64_t trials,
                                           const SampleOptions& options = {});

/// The same check at explicitly given matrices.
IntegralityReport check_integrality_at(const MatCoeffPoly& f,
                                       std::span<const IntMatrix> matrices);

/// { g_r(x) e_ij } for every generator and every (i, j): generators of M_n(I).
/// Throws NonMemberGenerator.
std::vector<MatCoeffPoly> mn_ideal_generators(std::span<const RationalPoly> gens, std::size_t n,
                                              const MembershipOptions& options = {});

/// The distinct nonzero entries of phi(F) over all inputs, in first-seen order.
/// Throws NonMemberElement.
std::vector<RationalPoly> entry_ideal_generators(std::span<const MatCoeffPoly> elems,
                                                 const MembershipOptions& options = {});

}  // namespace ivpoly
