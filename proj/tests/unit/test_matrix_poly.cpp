#include <doctest.h>

#include <random>

#include "ivpoly/error.hpp"
#include "ivpoly/matrix_poly.hpp"
#include "selfcheck/reference_oracles.hpp"

using namespace ivpoly;
using namespace ivpoly::testing;

namespace {

RatMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  return RatMatrix::unit(n, i - 1, j - 1);
}

/// A * x^k as a matrix-coefficient polynomial.
MatCoeffPoly monomial(const RatMatrix& a, std::size_t k) {
  std::vector<RatMatrix> coeffs(k + 1, RatMatrix(a.size()));
  coeffs[k] = a;
  return MatCoeffPoly(a.size(), std::move(coeffs));
}

RationalPoly family2() {
  const IntPoly x = IntPoly::x();
  return canonicalize((IntPoly::monomial(1, 4) - x) * (IntPoly::monomial(1, 2) - x), 2);
}

MatCoeffPoly random_matcoeff(std::mt19937_64& rng, std::size_t n, int max_degree) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<RatMatrix> coeffs(static_cast<std::size_t>(deg(rng)) + 1, RatMatrix(n));
  for (auto& a : coeffs)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = Rational(num(rng), den(rng));
        a(i, j).canonicalize();
      }
  return MatCoeffPoly(n, std::move(coeffs));
}

MatOfPoly of_entries(std::size_t n, const std::vector<RationalPoly>& entries) {
  MatOfPoly m(n);
  for (std::size_t k = 0; k < entries.size(); ++k) m(k / n, k % n) = entries[k];
  return m;
}

}  // namespace

TEST_CASE("phi examples") {
  const RatMatrix id = RatMatrix::identity(2);
  const MatCoeffPoly f = monomial(id, 1) + MatCoeffPoly::constant(unit(2, 1, 2));
  const MatOfPoly expected = of_entries(2, {RationalPoly(IntPoly{0, 1}), RationalPoly(IntPoly{1}),
                                            RationalPoly(), RationalPoly(IntPoly{0, 1})});
  CHECK(phi(f) == expected);
  CHECK(phi_inv(expected) == f);

  CHECK(phi(MatCoeffPoly(2)) == MatOfPoly(2));
  CHECK(phi_inv(MatOfPoly(3)).is_zero());

  const MatCoeffPoly prod = monomial(unit(2, 1, 2), 1) * monomial(unit(2, 2, 1), 1);
  CHECK(prod == monomial(unit(2, 1, 1), 2));
  CHECK(phi(prod) == of_entries(2, {RationalPoly(IntPoly{0, 0, 1}), RationalPoly(), RationalPoly(),
                                    RationalPoly()}));
  CHECK(phi_inv(phi(prod)) == monomial(unit(2, 1, 1), 2));
}

TEST_CASE("mat_poly_mul is noncommutative") {
  const MatCoeffPoly a = monomial(unit(2, 1, 2), 1);
  const MatCoeffPoly b = monomial(unit(2, 2, 1), 1);
  CHECK(mat_poly_mul(a, b) == monomial(unit(2, 1, 1), 2));
  CHECK(mat_poly_mul(b, a) == monomial(unit(2, 2, 2), 2));
  CHECK(mat_poly_mul(a, b) != mat_poly_mul(b, a));
  try {
    mat_poly_mul(a, MatCoeffPoly::constant(RatMatrix::identity(3)));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDimensionMismatch);
  }
}

TEST_CASE("phi is a bijective ring homomorphism") {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 3;
    const MatCoeffPoly f = random_matcoeff(rng, n, 4);
    const MatCoeffPoly g = random_matcoeff(rng, n, 4);
    CHECK(phi_inv(phi(f)) == f);
    CHECK(phi(phi_inv(phi(g))) == phi(g));
    CHECK(phi(f + g) == phi(f) + phi(g));
    CHECK(phi(mat_poly_mul(f, g)) == phi(f) * phi(g));
  }
}

TEST_CASE("eval_matcoeff_at_matrix") {
  const IntMatrix c{{1, 2}, {3, 4}};
  CHECK(eval_matcoeff_at_matrix(monomial(unit(2, 1, 2), 1), c) == to_rational(IntMatrix{{3, 4}, {0, 0}}));
  RatMatrix a0(2);
  a0(0, 0) = Rational(1, 3);
  a0(1, 0) = 5;
  CHECK(eval_matcoeff_at_matrix(MatCoeffPoly::constant(a0), c) == a0);
  CHECK(eval_matcoeff_at_matrix(monomial(RatMatrix::identity(2), 2), c) == to_rational(c * c));
  CHECK_THROWS_AS(eval_matcoeff_at_matrix(monomial(unit(2, 1, 2), 1), IntMatrix::identity(3)), Error);
}

TEST_CASE("evaluation is not multiplicative in general") {
  // F = x I, G = e12: (FG)(C) = e12 C but F(C) G(C) = C e12.
  const MatCoeffPoly f = monomial(RatMatrix::identity(2), 1);
  const MatCoeffPoly g = MatCoeffPoly::constant(unit(2, 1, 2));
  const IntMatrix c{{1, 2}, {3, 4}};
  const RatMatrix lhs = eval_matcoeff_at_matrix(mat_poly_mul(f, g), c);
  const RatMatrix rhs = eval_matcoeff_at_matrix(f, c) * eval_matcoeff_at_matrix(g, c);
  CHECK(lhs == to_rational(IntMatrix{{3, 4}, {0, 0}}));
  CHECK(rhs == to_rational(IntMatrix{{0, 1}, {0, 3}}));
  CHECK(lhs != rhs);
}

TEST_CASE("entry_scalarize") {
  const std::vector<RationalPoly> fs{RationalPoly(IntPoly{0, 1}), canonicalize(IntPoly{0, -1, 1}, 2),
                                     RationalPoly(IntPoly{1}), RationalPoly(IntPoly{0, 0, 0, 1})};
  const MatCoeffPoly f = phi_inv(of_entries(2, fs));
  CHECK(entry_scalarize(f, 1, 2) == fs[1]);
  CHECK(sandwich_sum(f, 1, 2) == MatCoeffPoly::scalar(fs[1], 2));
  CHECK(entry_scalarize(f, 2, 1) == fs[2]);

  const MatCoeffPoly diag = phi_inv(of_entries(2, {fs[3], RationalPoly(), RationalPoly(), fs[0]}));
  CHECK(entry_scalarize(diag, 1, 1) == fs[3]);
  CHECK(entry_scalarize(diag, 1, 2).is_zero());

  try {
    entry_scalarize(f, 3, 1);
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIndexOutOfRange);
  }
  CHECK_THROWS_AS(entry_scalarize(f, 0, 1), Error);
}

TEST_CASE("sandwich sum equals direct entry read on random inputs") {
  std::mt19937_64 rng(137);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 3;
    const MatCoeffPoly f = random_matcoeff(rng, n, 4);
    const MatOfPoly m = phi(f);
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k) {
        CHECK(sandwich_sum(f, j, k) == MatCoeffPoly::scalar(m(j - 1, k - 1), n));
        CHECK(entry_scalarize(f, j, k) == m(j - 1, k - 1));
      }
  }
}

TEST_CASE("member_matrix_poly") {
  const RationalPoly half = canonicalize(IntPoly{0, -1, 1}, 2);
  SUBCASE("failing entry") {
    const MatCoeffPoly f = phi_inv(of_entries(
        2, {RationalPoly(IntPoly{0, 1}), half, RationalPoly(IntPoly{1}), RationalPoly(IntPoly{0, 0, 0, 1})}));
    const auto report = member_matrix_poly(f);
    CHECK_FALSE(report.member);
    REQUIRE(report.failing_entry);
    CHECK(report.failing_entry->first == 1);
    CHECK(report.failing_entry->second == 2);
    REQUIRE(report.entry_verdict);
    CHECK_FALSE(report.entry_verdict->member);
    // the irreducible witness x^2+x+1 also fails, through evaluation
    IntMatrix c = companion(IntPoly{1, 1, 1});
    CHECK_FALSE(check_integrality_at(f, std::span<const IntMatrix>(&c, 1)).integral);
  }
  SUBCASE("integer entries") {
    std::mt19937_64 rng(139);
    std::vector<RationalPoly> entries;
    for (int k = 0; k < 9; ++k) entries.emplace_back(random_poly(rng, 5, 20));
    const MatCoeffPoly f = phi_inv(of_entries(3, entries));
    CHECK(member_matrix_poly(f).member);
    CHECK(sample_check_integrality(f, 50).integral);
  }
  SUBCASE("all entries the family element") {
    const RationalPoly g = family2();
    const MatCoeffPoly f = phi_inv(of_entries(2, {g, g, g, g}));
    CHECK(member_matrix_poly(f).member);
    CHECK(sample_check_integrality(f, 500).integral);
  }
}

TEST_CASE("sample_check_integrality") {
  const RationalPoly half = canonicalize(IntPoly{0, -1, 1}, 2);
  const MatCoeffPoly f = MatCoeffPoly::scalar(half, 2);
  const IntMatrix c = companion(IntPoly{1, 1, 1});
  const auto at = check_integrality_at(f, std::span<const IntMatrix>(&c, 1));
  CHECK_FALSE(at.integral);
  REQUIRE(at.value);
  CHECK((*at.value)(0, 0) == Rational(-1, 2));

  const auto sampled = sample_check_integrality(f, 500);
  CHECK_FALSE(sampled.integral);
  REQUIRE(sampled.failing_matrix);
  CHECK_FALSE(member_matrix_poly(f).member);
}

TEST_CASE("ideal generator translation") {
  const RationalPoly g = family2();
  const std::vector<RationalPoly> gens{g};
  const auto mats = mn_ideal_generators(gens, 2);
  REQUIRE(mats.size() == 4);
  for (std::size_t idx = 0; idx < mats.size(); ++idx) {
    CHECK(member_matrix_poly(mats[idx]).member);
    const std::size_t i = idx / 2 + 1;
    const std::size_t j = idx % 2 + 1;
    for (std::size_t a = 1; a <= 2; ++a)
      for (std::size_t b = 1; b <= 2; ++b) {
        const RationalPoly e = entry_scalarize(mats[idx], a, b);
        CHECK(e == (a == i && b == j ? g : RationalPoly()));
      }
  }
  CHECK(entry_ideal_generators(mats) == gens);
  CHECK(mn_ideal_generators({}, 2).empty());
  CHECK(entry_ideal_generators({}).empty());

  const MatCoeffPoly single = phi_inv(of_entries(2, {g, RationalPoly(), RationalPoly(), RationalPoly()}));
  const std::vector<MatCoeffPoly> elems{single};
  CHECK(entry_ideal_generators(elems) == gens);

  const std::vector<RationalPoly> bad{canonicalize(IntPoly{0, -1, 1}, 2)};
  try {
    mn_ideal_generators(bad, 2);
    FAIL("expected NonMemberGenerator");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonMemberGenerator);
  }
  const std::vector<MatCoeffPoly> bad_elems{MatCoeffPoly::scalar(bad[0], 2)};
  try {
    entry_ideal_generators(bad_elems);
    FAIL("expected NonMemberElement");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonMemberElement);
  }
}
