#include "ivpoly/matrix.hpp"

#include <string>

namespace ivpoly {

IntMatrix companion(const IntPoly& h) {
  if (h.degree() < 1) {
    throw Error(ErrorCode::kDegreeZero, "companion matrix needs degree >= 1");
  }
  if (!h.is_monic()) {
    throw Error(ErrorCode::kNonMonic, "companion matrix needs a monic polynomial, got " +
                                          h.to_string());
  }
  const auto n = static_cast<std::size_t>(h.degree());
  IntMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -h.coeff(i);
  return c;
}

IntPoly char_poly(const IntMatrix& a) {
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  // The division by k is exact over Z.
  const std::size_t n = a.size();
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Integer t = (a * m).trace();
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), k);
    c[n - k] = -t;
  }
  return IntPoly(std::move(c));
}

IntMatrix eval_poly_at_matrix(const IntPoly& g, const IntMatrix& a) {
  const std::size_t n = a.size();
  IntMatrix acc(n);
  auto coeffs = g.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * a;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  IntMatrix out(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) out(na + i, na + j) = b(i, j);
  return out;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& a) {
  IntMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j).get_den() != 1) return std::nullopt;
      out(i, j) = a(i, j).get_num();
    }
  }
  return out;
}

}  // namespace ivpoly
