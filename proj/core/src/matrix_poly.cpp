#include "ivpoly/matrix_poly.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ivpoly/error.hpp"

namespace ivpoly {

namespace {

void check_dims(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kDimensionMismatch, "dimensions " + std::to_string(a) + " and " +
                                                   std::to_string(b) + " differ");
  }
}

void check_index(std::size_t n, std::size_t j, std::size_t k) {
  if (j < 1 || j > n || k < 1 || k > n) {
    throw Error(ErrorCode::kIndexOutOfRange, "entry (" + std::to_string(j) + ", " +
                                                 std::to_string(k) + ") outside 1.." +
                                                 std::to_string(n));
  }
}

RatMatrix rational_unit(std::size_t n, std::size_t i, std::size_t j) {
  return RatMatrix::unit(n, i, j);
}

}  // namespace

MatCoeffPoly::MatCoeffPoly(std::size_t n, std::vector<RatMatrix> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  for (const auto& a : coeffs_) check_dims(n_, a.size());
  trim();
}

void MatCoeffPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MatCoeffPoly MatCoeffPoly::scalar(const RationalPoly& f, std::size_t n) {
  std::vector<RatMatrix> coeffs;
  for (int k = 0; k <= f.degree(); ++k) {
    coeffs.push_back(RatMatrix::identity(n) * f.coeff(static_cast<std::size_t>(k)));
  }
  return MatCoeffPoly(n, std::move(coeffs));
}

MatCoeffPoly MatCoeffPoly::constant(const RatMatrix& a) {
  return MatCoeffPoly(a.size(), std::vector<RatMatrix>{a});
}

MatCoeffPoly operator+(const MatCoeffPoly& a, const MatCoeffPoly& b) {
  check_dims(a.n_, b.n_);
  std::vector<RatMatrix> out(std::max(a.coeffs_.size(), b.coeffs_.size()), RatMatrix(a.n_));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return MatCoeffPoly(a.n_, std::move(out));
}

MatCoeffPoly operator*(const MatCoeffPoly& a, const MatCoeffPoly& b) {
  check_dims(a.n_, b.n_);
  if (a.is_zero() || b.is_zero()) return MatCoeffPoly(a.n_);
  std::vector<RatMatrix> out(a.coeffs_.size() + b.coeffs_.size() - 1, RatMatrix(a.n_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return MatCoeffPoly(a.n_, std::move(out));
}

MatCoeffPoly mat_poly_mul(const MatCoeffPoly& f, const MatCoeffPoly& g) { return f * g; }

MatOfPoly operator+(const MatOfPoly& a, const MatOfPoly& b) {
  check_dims(a.n_, b.n_);
  MatOfPoly out(a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

MatOfPoly operator*(const MatOfPoly& a, const MatOfPoly& b) {
  check_dims(a.n_, b.n_);
  const std::size_t n = a.n_;
  MatOfPoly out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(i, j) = out(i, j) + a(i, k) * b(k, j);
  return out;
}

MatOfPoly phi(const MatCoeffPoly& f) {
  const std::size_t n = f.size();
  MatOfPoly out(n);
  std::vector<Rational> entry(f.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < entry.size(); ++k) entry[k] = f.coeffs()[k](i, j);
      out(i, j) = RationalPoly::from_coeffs(entry);
    }
  }
  return out;
}

MatCoeffPoly phi_inv(const MatOfPoly& m) {
  const std::size_t n = m.size();
  int degree = IntPoly::kZeroDegree;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) degree = std::max(degree, m(i, j).degree());
  if (degree < 0) return MatCoeffPoly(n);
  std::vector<RatMatrix> coeffs(static_cast<std::size_t>(degree) + 1, RatMatrix(n));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) coeffs[k](i, j) = m(i, j).coeff(k);
  return MatCoeffPoly(n, std::move(coeffs));
}

RatMatrix eval_matcoeff_at_matrix(const MatCoeffPoly& f, const IntMatrix& c) {
  check_dims(f.size(), c.size());
  const RatMatrix cq = to_rational(c);
  RatMatrix acc(f.size());
  auto coeffs = f.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * cq + *it;
  return acc;
}

MatCoeffPoly sandwich_sum(const MatCoeffPoly& f, std::size_t j, std::size_t k) {
  const std::size_t n = f.size();
  check_index(n, j, k);
  MatCoeffPoly sum(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto left = MatCoeffPoly::constant(rational_unit(n, i, j - 1));
    const auto right = MatCoeffPoly::constant(rational_unit(n, k - 1, i));
    sum = sum + left * f * right;
  }
  return sum;
}

RationalPoly entry_scalarize(const MatCoeffPoly& f, std::size_t j, std::size_t k) {
  check_index(f.size(), j, k);
  RationalPoly direct = phi(f)(j - 1, k - 1);
  if (sandwich_sum(f, j, k) != MatCoeffPoly::scalar(direct, f.size())) {
    throw Error(ErrorCode::kInternalAssertionFailure,
                "matrix-unit sandwich disagrees with entry (" + std::to_string(j) + ", " +
                    std::to_string(k) + ")");
  }
  return direct;
}

MatrixMembershipReport member_matrix_poly(const MatCoeffPoly& f,
                                          const MembershipOptions& options) {
  MatrixMembershipReport report;
  const std::size_t n = f.size();
  const MatOfPoly entries = phi(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MembershipVerdict verdict =
          member_via_divisibility(entries(i, j), static_cast<int>(n), options);
      report.cases += verdict.cases;
      if (!verdict.member) {
        report.member = false;
        report.failing_entry = {i + 1, j + 1};
        report.entry_verdict = std::move(verdict);
        return report;
      }
    }
  }
  return report;
}

IntegralityReport check_integrality_at(const MatCoeffPoly& f,
                                       std::span<const IntMatrix> matrices) {
  IntegralityReport report;
  for (const auto& c : matrices) {
    ++report.trials;
    RatMatrix value = eval_matcoeff_at_matrix(f, c);
    if (!to_integer(value)) {
      report.integral = false;
      report.failing_matrix = c;
      report.value = std::move(value);
      break;
    }
  }
  return report;
}

IntegralityReport sample_check_integrality(const MatCoeffPoly& f, std::uint64_t trials,
                                           const SampleOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> entry(-options.entry_bound, options.entry_bound);
  const std::size_t n = f.size();
  IntegralityReport report;
  for (std::uint64_t t = 0; t < trials; ++t) {
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = entry(rng);
    IntegralityReport one = check_integrality_at(f, std::span<const IntMatrix>(&c, 1));
    ++report.trials;
    if (!one.integral) {
      report.integral = false;
      report.failing_matrix = std::move(one.failing_matrix);
      report.value = std::move(one.value);
      break;
    }
  }
  return report;
}

std::vector<MatCoeffPoly> mn_ideal_generators(std::span<const RationalPoly> gens, std::size_t n,
                                              const MembershipOptions& options) {
  std::vector<MatCoeffPoly> out;
  for (const auto& g : gens) {
    if (!member_via_divisibility(g, static_cast<int>(n), options).member) {
      throw Error(ErrorCode::kNonMemberGenerator,
                  g.to_string() + " is not in Int(M_" + std::to_string(n) + "(Z))");
    }
    const MatCoeffPoly scalar = MatCoeffPoly::scalar(g, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.push_back(scalar * MatCoeffPoly::constant(rational_unit(n, i, j)));
      }
    }
  }
  return out;
}

std::vector<RationalPoly> entry_ideal_generators(std::span<const MatCoeffPoly> elems,
                                                 const MembershipOptions& options) {
  std::vector<RationalPoly> out;
  for (const auto& f : elems) {
    if (!member_matrix_poly(f, options).member) {
      throw Error(ErrorCode::kNonMemberElement, "element is not in Int[M_n(Z)]");
    }
    for (std::size_t j = 1; j <= f.size(); ++j) {
      for (std::size_t k = 1; k <= f.size(); ++k) {
        RationalPoly c = entry_scalarize(f, j, k);
        if (c.is_zero() || std::find(out.begin(), out.end(), c) != out.end()) continue;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace ivpoly
