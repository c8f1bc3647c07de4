#include <doctest.h>

#include <random>

#include "ivpoly/error.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/membership.hpp"
#include "ivpoly/residue_poly.hpp"
#include "selfcheck/reference_oracles.hpp"

using namespace ivpoly;
using namespace ivpoly::testing;

namespace {

RationalPoly family2() {
  const IntPoly x = IntPoly::x();
  return canonicalize((IntPoly::monomial(1, 4) - x) * (IntPoly::monomial(1, 2) - x), 2);
}

const RationalPoly kHalfBinomial = canonicalize(IntPoly{0, -1, 1}, 2);  // (x^2-x)/2

std::vector<MembershipVerdict> all_oracles(const RationalPoly& f, int n,
                                           const MembershipOptions& options = {}) {
  return {member_via_divisibility(f, n, options), member_via_companion(f, n, options),
          member_via_irreducible_companion(f, n, options)};
}

}  // namespace

TEST_CASE("enumerate_monic order and counts") {
  std::vector<IntPoly> got(enumerate_monic(1, 3).begin(), enumerate_monic(1, 3).end());
  CHECK(got == std::vector<IntPoly>{IntPoly{0, 1}, IntPoly{1, 1}, IntPoly{2, 1}});

  const auto quad = enumerate_monic(2, 2);
  got.assign(quad.begin(), quad.end());
  CHECK(got == std::vector<IntPoly>{IntPoly{0, 0, 1}, IntPoly{0, 1, 1}, IntPoly{1, 0, 1},
                                    IntPoly{1, 1, 1}});
  CHECK(enumerate_monic(3, 2).size() == 8);

  const auto cubic = enumerate_monic(3, 5);
  CHECK(cubic.size() == 125);
  std::vector<IntPoly> all(cubic.begin(), cubic.end());
  std::sort(all.begin(), all.end(), [](const IntPoly& a, const IntPoly& b) {
    return a.to_string() < b.to_string();
  });
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("enumerate_monic budget and argument errors") {
  try {
    enumerate_monic(3, 12, EnumerationBudget{1000});
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kBudgetExceeded);
  }
  CHECK(enumerate_monic(3, 10, EnumerationBudget{1000}).size() == 1000);
  CHECK_THROWS_AS(enumerate_monic(0, 3), Error);
  CHECK_THROWS_AS(enumerate_monic(2, 1), Error);
}

TEST_CASE("is_irreducible_mod_p examples") {
  CHECK(is_irreducible_mod_p(IntPoly{1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible_mod_p(IntPoly{1, 0, 1}, 2));
  CHECK(is_irreducible_mod_p(IntPoly{-3, 1}, 5));
  CHECK(is_irreducible_mod_p(IntPoly{1, 0, 1}, 7));
  CHECK_FALSE(is_irreducible_mod_p(IntPoly{1, 0, 1}, 5));
  // x^4+x+1 is irreducible over F_2, x^4+x^2+1 = (x^2+x+1)^2 is not
  CHECK(is_irreducible_mod_p(IntPoly{1, 1, 0, 0, 1}, 2));
  CHECK_FALSE(is_irreducible_mod_p(IntPoly{1, 0, 1, 0, 1}, 2));
}

TEST_CASE("is_irreducible_mod_p errors") {
  try {
    is_irreducible_mod_p(IntPoly{1, 1}, 6);
    FAIL("expected CompositeModulus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCompositeModulus);
  }
  try {
    is_irreducible_mod_p(IntPoly{1, 1, 3}, 3);
    FAIL("expected DegreeDrop");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegreeDrop);
  }
}

TEST_CASE("Ben-Or agrees with exhaustive factor search") {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int n = 1; n <= 4; ++n) {
      if (p == 7 && n == 4) continue;
      for (const IntPoly& h : enumerate_monic(n, p)) {
        CHECK_MESSAGE(is_irreducible_mod_p(h, p) == irreducible_brute_force(h, p),
                      h.to_string() << " mod " << p);
      }
    }
  }
  // Irreducible count for degree 4 over F_3 is (3^4 - 3^2)/4 = 18.
  int count = 0;
  for (const IntPoly& h : enumerate_monic(4, 3)) count += is_irreducible_mod_p(h, 3) ? 1 : 0;
  CHECK(count == 18);
}

TEST_CASE("irreducible_lift examples") {
  SUBCASE("x^2+x mod 2") {
    const auto lift = irreducible_lift(IntPoly{0, 1, 1}, 2);
    CHECK(lift.poly == IntPoly{2, 1, 1});
    CHECK(lift.prime == 3);
  }
  SUBCASE("degree one") {
    const auto lift = irreducible_lift(IntPoly{0, 1}, 2);
    CHECK(lift.poly == IntPoly{0, 1});
    CHECK_FALSE(divides(lift.prime, 2));
  }
  SUBCASE("x^2+1 mod 3") {
    const auto lift = irreducible_lift(IntPoly{1, 0, 1}, 3);
    CHECK(lift.poly.is_monic());
    CHECK(lift.poly.degree() == 2);
    CHECK(reduce_mod(lift.poly, 3) == reduce_mod(IntPoly{1, 0, 1}, 3));
    CHECK_FALSE(divides(lift.prime, 3));
    CHECK(irreducible_brute_force(lift.poly, lift.prime));
  }
}

TEST_CASE("irreducible_lift postconditions on random inputs") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> mod(2, 60);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 4;
    const IntPoly h = random_monic(rng, n, 100);
    const Integer d = mod(rng);
    const auto lift = irreducible_lift(h, d);
    CHECK(lift.poly.is_monic());
    CHECK(lift.poly.degree() == n);
    CHECK(reduce_mod(lift.poly - h, d).is_zero());
    CHECK(is_prime(lift.prime));
    CHECK_FALSE(divides(lift.prime, d));
    if (lift.prime < 20 && n <= 4) CHECK(irreducible_brute_force(lift.poly, lift.prime));
  }
}

TEST_CASE("the lift is a CRT representative") {
  const IntPoly h{5, 3, 1};
  const auto lift = irreducible_lift(h, 6);
  const std::vector<ResiduePoly> parts{reduce_mod(h, 6), reduce_mod(lift.poly, lift.prime)};
  CHECK(crt_coeffwise(parts, 2) == lift.poly);
}

TEST_CASE("(x^2-x)/2 is in Int(M_1) but not Int(M_2)") {
  for (const auto& v : all_oracles(kHalfBinomial, 1)) {
    CHECK(v.member);
    CHECK_FALSE(v.witness);
    CHECK(v.cases == 2);
  }
  MembershipOptions all;
  all.all_witnesses = true;
  for (const auto& v : all_oracles(kHalfBinomial, 2, all)) {
    CHECK_FALSE(v.member);
    REQUIRE(v.witness);
    // x^2 is first in enumeration order; x^2+x+1 is the irreducible witness
    CHECK(*v.witness == IntPoly{0, 0, 1});
    CHECK(v.witnesses == std::vector<IntPoly>{IntPoly{0, 0, 1}, IntPoly{1, 0, 1}, IntPoly{1, 1, 1}});
    CHECK(v.cases == 4);
  }
  // remainder of x^2+x by x^2+x+1 is -1, odd
  CHECK(monic_divmod(IntPoly{0, 1, 1}, IntPoly{1, 1, 1}).remainder == IntPoly{-1});
  CHECK_FALSE(member_all_matrices(kHalfBinomial, 2));
  CHECK(member_all_matrices(kHalfBinomial, 1));
}

TEST_CASE("early exit stops at the first witness") {
  const auto v = member_via_divisibility(kHalfBinomial, 2);
  CHECK(v.cases == 1);
  CHECK(v.witnesses.empty());
}

TEST_CASE("the family element for p = 2 is a member at n = 2") {
  const RationalPoly f = family2();
  for (const auto& v : all_oracles(f, 2)) {
    CHECK(v.member);
    CHECK(v.cases == 4);
  }
  CHECK(member_all_matrices(f, 2));
  CHECK(member_all_matrices(f, 1));
}

TEST_CASE("generate_family") {
  for (long p : {2L, 3L, 5L}) {
    const RationalPoly f = generate_family(p);
    const unsigned long q = static_cast<unsigned long>(p);
    const IntPoly x = IntPoly::x();
    CHECK(f.numerator() == (IntPoly::monomial(1, q * q) - x) * (IntPoly::monomial(1, q) - x));
    CHECK(f.denominator() == p);
    for (const auto& v : all_oracles(f, 2)) CHECK(v.member);
  }
  CHECK(member_all_matrices(generate_family(3), 2));
  CHECK_THROWS_AS(generate_family(4), Error);
  CHECK_THROWS_AS(generate_family(7, 2, EnumerationBudget{10}), Error);
}

TEST_CASE("generate_family in other dimensions") {
  const RationalPoly f1 = generate_family(5, 1);
  CHECK(f1 == canonicalize(IntPoly::monomial(1, 5) - IntPoly::x(), 5));
  CHECK(member_n1_values(f1));
  const RationalPoly f3 = generate_family(2, 3);
  CHECK(f3.numerator().degree() == 14);
  for (const auto& v : all_oracles(f3, 3)) CHECK(v.member);
  CHECK_FALSE(member_via_divisibility(f3, 4).member);
}

TEST_CASE("family elements are not members one dimension up") {
  CHECK_FALSE(member_via_divisibility(family2(), 3).member);
}

TEST_CASE("integer polynomials are members") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 30; ++t) {
    const RationalPoly f(random_poly(rng, 8, 50));
    for (const auto& v : all_oracles(f, 1 + t % 3)) {
      CHECK(v.member);
      CHECK(v.cases == 0);
    }
  }
}

TEST_CASE("oracles agree with semantic brute force over all matrices mod d") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> den(2, 4);
  int members = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 1 + t % 2;
    const RationalPoly f = canonicalize(random_poly(rng, 8, 6), den(rng));
    if (f.is_integral()) continue;
    const bool expected = member_all_matrices(f, n);
    members += expected ? 1 : 0;
    for (const auto& v : all_oracles(f, static_cast<int>(n))) CHECK(v.member == expected);
  }
  // Build members by multiplying random polynomials with the family element.
  for (int t = 0; t < 20; ++t) {
    const RationalPoly f = family2() * RationalPoly(random_poly(rng, 2, 5));
    CHECK(member_all_matrices(f, 2));
    for (const auto& v : all_oracles(f, 2)) CHECK(v.member);
  }
  MESSAGE("random members found: " << members);
}

TEST_CASE("n = 1 membership is the value test d | g(a) for a in [0, d)") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> den(2, 30);
  for (int t = 0; t < 300; ++t) {
    RationalPoly f = canonicalize(random_poly(rng, 8, 50), den(rng));
    if (t % 3 == 0) {
      // bias towards members: multiply by x(x-1)...(x-d+1)
      IntPoly falling{1};
      for (long a = 0; a < f.denominator().get_si(); ++a) falling *= IntPoly{-a, 1};
      f = canonicalize(f.numerator() * falling, f.denominator());
    }
    CHECK(member_via_divisibility(f, 1).member == member_n1_values(f));
  }
}

TEST_CASE("prime_power_split") {
  SUBCASE("d = 6, n = 1") {
    const RationalPoly f = canonicalize(IntPoly{0, -1, 1}, 6);
    const auto parts = prime_power_split(f, 1);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].prime_power == 2);
    CHECK(parts[0].verdict.member);
    CHECK(parts[1].prime_power == 3);
    CHECK_FALSE(parts[1].verdict.member);
    // x+1 = x-2 mod 3 fails since g(2) = 2
    CHECK(*parts[1].verdict.witness == IntPoly{1, 1});
    CHECK(IntPoly{0, -1, 1}(2) == 2);
    CHECK_FALSE(all_members(parts));
    CHECK_FALSE(member_via_divisibility(f, 1).member);
  }
  SUBCASE("prime power denominator is a single part") {
    const auto parts = prime_power_split(canonicalize(IntPoly{0, 1, 3}, 4), 1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].prime_power == 4);
    CHECK(parts[0].exponent == 2);
  }
  SUBCASE("random agreement with the direct verdict") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> den(2, 12);
    for (int t = 0; t < 200; ++t) {
      const int n = 1 + t % 2;
      RationalPoly f = canonicalize(random_poly(rng, 8, 50), den(rng));
      if (t % 2 == 0) f = f * family2();
      CHECK(all_members(prime_power_split(f, n)) == member_via_divisibility(f, n).member);
    }
  }
}

TEST_CASE("ring closure of members") {
  std::mt19937_64 rng(73);
  std::vector<RationalPoly> members{family2(), canonicalize(IntPoly{0, -1, 1}, 1)};
  for (int t = 0; t < 40; ++t) {
    const auto& a = members[rng() % members.size()];
    RationalPoly b = family2() * RationalPoly(random_poly(rng, 3, 9)) + RationalPoly(random_poly(rng, 4, 9));
    REQUIRE(member_via_divisibility(b, 2).member);
    CHECK(member_via_divisibility(a + b, 2).member);
    CHECK(member_via_divisibility(a * b, 2).member);
    members.push_back(b);
  }
}

TEST_CASE("monotonicity in n") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<long> den(2, 6);
  for (int t = 0; t < 100; ++t) {
    RationalPoly f = canonicalize(random_poly(rng, 8, 20), den(rng));
    if (t % 2 == 0) f = f * family2();
    for (int n = 3; n >= 2; --n) {
      if (member_via_divisibility(f, n).member) {
        for (int m = 1; m < n; ++m) CHECK(member_via_divisibility(f, m).member);
      }
    }
  }
}

TEST_CASE("parallel scan is deterministic") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 40; ++t) {
    const RationalPoly f = canonicalize(random_poly(rng, 8, 50), 2 + t % 11);
    MembershipOptions seq;
    MembershipOptions par;
    par.jobs = 4;
    for (bool all : {false, true}) {
      seq.all_witnesses = par.all_witnesses = all;
      const auto a = member_via_divisibility(f, 3, seq);
      const auto b = member_via_divisibility(f, 3, par);
      CHECK(a.member == b.member);
      CHECK(a.witness == b.witness);
      CHECK(a.cases == b.cases);
      CHECK(a.witnesses == b.witnesses);
    }
  }
}
