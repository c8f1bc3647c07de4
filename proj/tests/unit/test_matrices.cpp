#include <doctest.h>

#include <random>

#include "ivpoly/error.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/residue_matrix.hpp"
#include "ivpoly/residue_poly.hpp"
#include "selfcheck/reference_oracles.hpp"

using namespace ivpoly;
using namespace ivpoly::testing;

TEST_CASE("companion examples") {
  CHECK(companion(IntPoly{1, 1, 1}) == IntMatrix{{0, -1}, {1, -1}});
  CHECK(companion(IntPoly{-3, 1}) == IntMatrix{{3}});
  CHECK(companion(IntPoly{1, 0, 1}) == IntMatrix{{0, -1}, {1, 0}});
  CHECK(companion(IntPoly{5, -4, 3, 1}) == IntMatrix{{0, 0, -5}, {1, 0, 4}, {0, 1, -3}});
}

TEST_CASE("companion errors") {
  try {
    companion(IntPoly{1, 2});
    FAIL("expected NonMonic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonMonic);
  }
  try {
    companion(IntPoly{1});
    FAIL("expected DegreeZero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegreeZero);
  }
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix{{0, -1}, {1, 0}}) == IntPoly{1, 0, 1});
  CHECK(char_poly(IntMatrix::identity(3)) == IntPoly{-1, 3, -3, 1});
  // 2x2: x^2 - tr x + det
  const IntMatrix a{{4, -7}, {2, 9}};
  CHECK(char_poly(a) == IntPoly{4 * 9 + 7 * 2, -13, 1});
}

TEST_CASE("char_poly of a companion matrix is its polynomial") {
  // Exhaustive over a small coefficient box up to degree 3.
  for (int n = 1; n <= 3; ++n) {
    std::vector<long> digits(static_cast<std::size_t>(n), -2);
    for (;;) {
      std::vector<Integer> c(digits.begin(), digits.end());
      c.emplace_back(1);
      const IntPoly h(std::move(c));
      CHECK(char_poly(companion(h)) == h);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == 3) digits[i++] = -2;
      if (i == digits.size()) break;
    }
  }
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const IntPoly h = random_monic(rng, 4 + t % 2, 1000);
    CHECK(char_poly(companion(h)) == h);
  }
}

TEST_CASE("Faddeev-LeVerrier agrees with cofactor expansion") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const IntMatrix a = random_matrix(rng, 1 + t % 3, 9);
    CHECK(char_poly(a) == char_poly_cofactor(a));
  }
  for (int t = 0; t < 20; ++t) {
    const IntMatrix a = random_matrix(rng, 5, 50);
    CHECK(char_poly(a) == char_poly_cofactor(a));
  }
}

TEST_CASE("Cayley-Hamilton") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    const IntMatrix a = random_matrix(rng, 1 + t % 4, 9);
    CHECK(eval_poly_at_matrix(char_poly(a), a).is_zero());
  }
}

TEST_CASE("eval_poly_at_matrix examples") {
  CHECK(eval_poly_at_matrix(IntPoly{1, 0, 1}, IntMatrix{{0, -1}, {1, 0}}).is_zero());
  const IntMatrix a{{5, 3}, {-2, 8}};
  CHECK(eval_poly_at_matrix(IntPoly{1}, a) == IntMatrix::identity(2));
  CHECK(eval_poly_at_matrix(IntPoly{}, a).is_zero());
  const IntMatrix c = companion(IntPoly{1, 1, 1});
  CHECK(c * c == IntMatrix{{-1, 1}, {-1, 0}});
  CHECK(eval_poly_at_matrix(IntPoly{0, -1, 1}, c) == IntMatrix{{-1, 2}, {-2, 1}});
}

TEST_CASE("Horner evaluation matches explicit power sums") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const IntPoly g = random_poly(rng, 8, 50);
    const IntMatrix a = random_matrix(rng, 1 + t % 3, 9);
    CHECK(eval_poly_at_matrix(g, a) == eval_by_powers(g, a));
  }
}

TEST_CASE("companion matrix has its polynomial as minimal polynomial") {
  // No nonzero monic annihilator of degree < n over a small coefficient box.
  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 3;
    const IntMatrix c = companion(random_monic(rng, n, 5));
    for (int m = 0; m < n; ++m) {
      std::vector<long> digits(static_cast<std::size_t>(m), -3);
      for (;;) {
        std::vector<Integer> coeffs(digits.begin(), digits.end());
        coeffs.emplace_back(1);
        CHECK_FALSE(eval_poly_at_matrix(IntPoly(std::move(coeffs)), c).is_zero());
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == 4) digits[i++] = -3;
        if (i == digits.size()) break;
      }
    }
  }
}

TEST_CASE("block_diag") {
  CHECK(block_diag(IntMatrix{{4}}, IntMatrix{{-6}}) == IntMatrix{{4, 0}, {0, -6}});
  const IntMatrix a{{1, 2}, {3, 4}};
  CHECK(block_diag(a, IntMatrix{}) == a);
  CHECK(block_diag(IntMatrix{}, a) == a);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const IntPoly g = random_poly(rng, 6, 20);
    const IntMatrix x = random_matrix(rng, 1 + t % 2, 9);
    const IntMatrix y = random_matrix(rng, 1 + t % 3, 9);
    CHECK(eval_poly_at_matrix(g, block_diag(x, y)) ==
          block_diag(eval_poly_at_matrix(g, x), eval_poly_at_matrix(g, y)));
  }
}

TEST_CASE("evaluation commutes with reduction mod d") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> mod(2, 30);
  for (int t = 0; t < 200; ++t) {
    const IntPoly g = random_poly(rng, 8, 100);
    const IntMatrix a = random_matrix(rng, 1 + t % 3, 20);
    const Integer d = mod(rng);
    CHECK(ResidueMatrix(eval_poly_at_matrix(g, a), d) ==
          eval_poly_at_matrix(reduce_mod(g, d), ResidueMatrix(a, d)));
  }
}

TEST_CASE("matrix arithmetic rejects mismatched dimensions") {
  try {
    (void)(IntMatrix::identity(2) * IntMatrix::identity(3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
}
