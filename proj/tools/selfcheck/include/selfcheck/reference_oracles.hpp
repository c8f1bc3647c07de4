// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ivpoly/integer.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/poly.hpp"
#include "ivpoly/rational_poly.hpp"

namespace ivpoly::testing {

/// det(xI - A) by Laplace expansion along the first row, entries in Z[x].
inline IntPoly char_poly_cofactor(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = (i == j ? IntPoly::x() : IntPoly{}) - IntPoly::constant(a(i, j));
  std::function<IntPoly(const std::vector<std::vector<IntPoly>>&)> det =
      [&](const std::vector<std::vector<IntPoly>>& b) -> IntPoly {
    const std::size_t k = b.size();
    if (k == 1) return b[0][0];
    IntPoly sum;
    for (std::size_t col = 0; col < k; ++col) {
      std::vector<std::vector<IntPoly>> minor;
      for (std::size_t i = 1; i < k; ++i) {
        std::vector<IntPoly> row;
        for (std::size_t j = 0; j < k; ++j)
          if (j != col) row.push_back(b[i][j]);
        minor.push_back(std::move(row));
      }
      IntPoly term = b[0][col] * det(minor);
      if (col % 2 == 0) sum += term; else sum -= term;
    }
    return sum;
  };
  return det(m);
}

/// Schoolbook matrix power sum g(A) = sum g_i A^i with explicit powers.
inline IntMatrix eval_by_powers(const IntPoly& g, const IntMatrix& a) {
  IntMatrix sum(a.size());
  IntMatrix power = IntMatrix::identity(a.size());
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
    sum += power * g.coeffs()[i];
    power = power * a;
  }
  return sum;
}

/// Whether u divides h over F_p, both given by integer coefficients, u monic.
inline bool divides_mod_p(const IntPoly& u, const IntPoly& h, const Integer& p) {
  std::vector<Integer> rem;
  for (const auto& c : h.coeffs()) rem.push_back(mod_floor(c, p));
  const std::size_t du = static_cast<std::size_t>(u.degree());
  for (std::size_t k = rem.size(); k-- > du;) {
    Integer lead = rem[k];
    for (std::size_t i = 0; i <= du; ++i)
      rem[k - du + i] = mod_floor(rem[k - du + i] - lead * u.coeff(i), p);
  }
  for (std::size_t i = 0; i < std::min(du, rem.size()); ++i)
    if (rem[i] != 0) return false;
  return true;
}

/// h (monic mod p) is irreducible iff no monic polynomial of degree
/// 1..deg/2 over F_p divides it. Exhaustive.
inline bool irreducible_brute_force(const IntPoly& h, const Integer& p) {
  const int n = h.degree();
  const unsigned long q = p.get_ui();
  for (int k = 1; k <= n / 2; ++k) {
    std::vector<unsigned long> digits(static_cast<std::size_t>(k), 0);
    for (;;) {
      std::vector<Integer> coeffs(digits.begin(), digits.end());
      coeffs.emplace_back(1);
      if (divides_mod_p(IntPoly(std::move(coeffs)), h, p)) return false;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return true;
}

/// Semantic membership: g(A) = 0 mod d for every A in M_n(Z/dZ). Since g(A)
/// mod d only depends on A mod d this decides f in Int(M_n(Z)) outright.
/// Exponential: d^{n^2} matrices.
inline bool member_all_matrices(const RationalPoly& f, std::size_t n) {
  const Integer& d = f.denominator();
  if (d == 1) return true;
  const unsigned long q = d.get_ui();
  std::vector<unsigned long> digits(n * n, 0);
  for (;;) {
    IntMatrix a(n);
    for (std::size_t k = 0; k < n * n; ++k) a(k / n, k % n) = digits[k];
    IntMatrix v = eval_by_powers(f.numerator(), a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!divides(d, v(i, j))) return false;
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) return true;
  }
}

/// n = 1 criterion: d | g(a) for every a in [0, d).
inline bool member_n1_values(const RationalPoly& f) {
  const Integer& d = f.denominator();
  for (Integer a = 0; a < d; ++a)
    if (!divides(d, f.numerator()(a))) return false;
  return true;
}

/// Least x in [0, prod m_i) with x = r_i mod m_i, by exhaustive search.
inline std::optional<Integer> crt_search(const std::vector<std::pair<Integer, Integer>>& system) {
  Integer bound = 1;
  for (const auto& [r, m] : system) bound *= m;
  for (Integer x = 0; x < bound; ++x) {
    bool ok = true;
    for (const auto& [r, m] : system) ok = ok && mod_floor(x - r, m) == 0;
    if (ok) return x;
  }
  return std::nullopt;
}

// --- generators ---------------------------------------------------------------

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPoly(std::move(c));
}

inline IntPoly random_monic(std::mt19937_64& rng, int degree, long bound) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = coeff(rng);
  c.back() = 1;
  return IntPoly(std::move(c));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace ivpoly::testing
