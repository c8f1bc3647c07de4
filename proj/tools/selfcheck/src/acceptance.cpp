#include "selfcheck/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "ivpoly/ivpoly.hpp"
#include "selfcheck/reference_oracles.hpp"

namespace ivpoly::selfcheck {

namespace {

using ivpoly::testing::eval_by_powers;
using ivpoly::testing::irreducible_brute_force;
using ivpoly::testing::random_matrix;
using ivpoly::testing::random_monic;
using ivpoly::testing::random_poly;

bool integral_quotient(const IntMatrix& value, const Integer& d) {
  for (std::size_t i = 0; i < value.size(); ++i)
    for (std::size_t j = 0; j < value.size(); ++j)
      if (!divides(d, value(i, j))) return false;
  return true;
}

bool within_bounds(const IntPoly& g, int max_degree, long bound) {
  if (g.degree() > max_degree) return false;
  for (const auto& c : g.coeffs())
    if (abs(c) > bound) return false;
  return true;
}

/// Members of Int(M_n(Z)) for n = 1, 2, 3 (each also a member for smaller n).
struct MemberPool {
  std::vector<std::vector<RationalPoly>> by_dimension;  // index n - 1

  MemberPool() : by_dimension(3) {
    const IntPoly x = IntPoly::x();
    auto& one = by_dimension[0];
    one.push_back(canonicalize(IntPoly{0, -1, 1}, 2));
    one.push_back(generate_family(3, 1));
    one.push_back(canonicalize(IntPoly{0, 2, -3, 1}, 6));  // x(x-1)(x-2)/6
    auto& two = by_dimension[1];
    two.push_back(generate_family(2, 2));
    two.push_back(generate_family(3, 2));
    two.push_back(generate_family(2, 2) * generate_family(3, 2));
    by_dimension[2].push_back(generate_family(2, 3));
  }

  /// A member for dimension n: pool element times a random integer
  /// polynomial plus a random integer polynomial.
  RationalPoly draw(std::mt19937_64& rng, int n) const {
    std::vector<const RationalPoly*> candidates;
    for (int k = n; k <= 3; ++k)
      for (const auto& f : by_dimension[static_cast<std::size_t>(k - 1)]) candidates.push_back(&f);
    const RationalPoly& base = *candidates[rng() % candidates.size()];
    return base * RationalPoly(random_poly(rng, 2, 4)) + RationalPoly(random_poly(rng, 3, 9));
  }
};

/// A random (g, d) with d in [2, 12], deg g <= 8 and coefficients in
/// [-50, 50]. For n <= 2 every other draw is steered towards membership;
/// no member of that size exists at n = 3.
RationalPoly agreement_instance(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> den(2, 12);
  static const long kFactorialDivisors[] = {2, 3, 4, 5, 6, 8, 10, 12};  // divisors of 5!
  const bool steer = n <= 2 && rng() % 2 == 0;
  for (int attempt = 0; attempt < 200; ++attempt) {
    long d = den(rng);
    IntPoly g = random_poly(rng, 8, 50);
    if (steer && attempt < 100) {
      IntPoly base{1};
      if (n == 1) {
        d = kFactorialDivisors[rng() % std::size(kFactorialDivisors)];
        for (long a = 0; a < 5; ++a) base *= IntPoly{-a, 1};
      } else {
        d = 2;
        base = generate_family(2, 2).numerator();
      }
      const IntPoly unit = rng() % 2 == 0 ? IntPoly{1} : IntPoly{-1};
      g = base * (attempt < 50 ? random_poly(rng, 8 - base.degree(), 1) : unit) +
          random_poly(rng, 8, 3) * Integer(d);
    }
    if (!within_bounds(g, 8, 50)) continue;
    RationalPoly f = canonicalize(g, d);
    if (f.is_integral()) continue;
    return f;
  }
  return canonicalize(IntPoly{0, -1, 1}, 2);
}

MatCoeffPoly from_entries(std::size_t n, const std::vector<RationalPoly>& entries) {
  MatOfPoly m(n);
  for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = entries[k];
  return phi_inv(m);
}

MatCoeffPoly random_matcoeff(std::mt19937_64& rng, std::size_t n, int max_degree) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
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

RationalPoly random_rational_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> den(1, 12);
  return canonicalize(random_poly(rng, 4, 20), den(rng));
}

MatCoeffPoly random_member_matrix(std::mt19937_64& rng, const MemberPool& pool) {
  std::vector<RationalPoly> entries;
  for (int k = 0; k < 4; ++k) {
    if (rng() % 4 == 0) {
      entries.emplace_back(random_poly(rng, 3, 9));
    } else {
      entries.push_back(pool.draw(rng, 2));
    }
  }
  return from_entries(2, entries);
}

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
};

// 1. Three-oracle agreement ----------------------------------------------------
CriterionResult three_oracle_agreement(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 1);
  Check check;
  int members = 0;
  int disagreements = 0;
  std::uint64_t cases = 0;
  for (int t = 0; t < cfg.agreement_instances; ++t) {
    const int n = 1 + t % 3;
    const RationalPoly f = agreement_instance(rng, n);
    const auto a = member_via_divisibility(f, n);
    const auto b = member_via_companion(f, n);
    const auto c = member_via_irreducible_companion(f, n);
    cases += a.cases + b.cases + c.cases;
    const bool agree = a.member == b.member && b.member == c.member && a.witness == b.witness &&
                       b.witness == c.witness && a.cases == b.cases && b.cases == c.cases;
    if (!agree) {
      ++disagreements;
      check.require(false, "oracles disagree on " + f.to_string() + " at n = " + std::to_string(n));
    }
    members += a.member ? 1 : 0;
  }
  check.detail << cfg.agreement_instances << " instances (" << members << " members, "
               << cfg.agreement_instances - members << " non-members), " << cases
               << " residue cases, " << disagreements << " disagreements";
  return {1, "three-oracle agreement", check.ok, check.detail.str()};
}

// 2. Known members and non-members ----------------------------------------------
CriterionResult known_members(const AcceptanceConfig&) {
  Check check;
  for (long p : {2L, 3L, 5L}) {
    const RationalPoly f = generate_family(p, 2);
    const unsigned long q = static_cast<unsigned long>(p);
    const IntPoly x = IntPoly::x();
    check.require(f.numerator() == (IntPoly::monomial(1, q * q) - x) * (IntPoly::monomial(1, q) - x) &&
                      f.denominator() == p,
                  "family shape for p = " + std::to_string(p));
    for (Oracle o : {Oracle::kDivisibility, Oracle::kCompanion, Oracle::kIrreducibleCompanion}) {
      check.require(check_membership(f, 2, o).member,
                    "family p = " + std::to_string(p) + " member via " + std::string(to_string(o)));
    }
  }
  const RationalPoly half = canonicalize(IntPoly{0, -1, 1}, 2);
  MembershipOptions all;
  all.all_witnesses = true;
  const IntPoly expected_witness{1, 1, 1};
  for (Oracle o : {Oracle::kDivisibility, Oracle::kCompanion, Oracle::kIrreducibleCompanion}) {
    check.require(check_membership(half, 1, o).member,
                  "(x^2-x)/2 member at n = 1 via " + std::string(to_string(o)));
    const auto v = check_membership(half, 2, o, all);
    check.require(!v.member, "(x^2-x)/2 non-member at n = 2 via " + std::string(to_string(o)));
    check.require(std::find(v.witnesses.begin(), v.witnesses.end(), expected_witness) !=
                      v.witnesses.end(),
                  "x^2+x+1 is a witness via " + std::string(to_string(o)));
  }
  // the witness certified directly: g(companion(x^2+x+1)) has odd entries
  const IntMatrix value = eval_poly_at_matrix(half.numerator(), companion(expected_witness));
  check.require(value == IntMatrix{{-1, 2}, {-2, 1}} && !integral_quotient(value, 2),
                "g(companion(x^2+x+1)) = [[-1,2],[-2,1]]");
  check.require(!monic_divmod(IntPoly{0, 1, 1}, expected_witness).remainder.is_zero(),
                "x^2+x+1 does not divide x^2+x mod 2");
  const auto first = member_via_divisibility(half, 2);
  check.detail << "families p=2,3,5 members; (x^2-x)/2 in Int(M_1), not in Int(M_2); witnesses "
               << "include x^2+x+1 (first in enumeration order: " << first.witness->to_string()
               << ")";
  return {2, "known members and non-members", check.ok, check.detail.str()};
}

// 3. Images are in Z[C] ----------------------------------------------------------
CriterionResult images_in_z_c(const AcceptanceConfig& cfg, const MemberPool& pool) {
  std::mt19937_64 rng(cfg.seed + 3);
  Check check;
  for (int t = 0; t < cfg.image_pairs; ++t) {
    const int n = 1 + t % 3;
    const RationalPoly f = n == 3 ? pool.by_dimension[2][0] * RationalPoly(random_poly(rng, 1, 3))
                                  : pool.draw(rng, n);
    const IntMatrix c = random_matrix(rng, static_cast<std::size_t>(n), 9);
    const IntPoly r = reduced_representative(f, c);
    const IntMatrix image = image_at(f, c);
    const IntMatrix numerator_value = eval_by_powers(f.numerator(), c);
    check.require(r.degree() < n, "deg r < n for " + f.to_string());
    check.require(image == eval_poly_at_matrix(r, c), "image = r(C)");
    check.require(image * f.denominator() == numerator_value, "d * image = g(C)");
    check.require(integral_quotient(numerator_value, f.denominator()), "g(C)/d integral");
  }
  const RationalPoly family = generate_family(2, 2);
  const IntMatrix rot{{0, -1}, {1, 0}};
  check.require(reduced_representative(family, rot) == IntPoly{-1}, "fixed case r = -1");
  check.require(image_at(family, rot) == IntMatrix{{-1, 0}, {0, -1}}, "fixed case image = -I");
  check.detail << cfg.image_pairs << " (member, matrix) pairs, n in {1,2,3}; fixed case r = -1, "
               << "image = -I";
  return {3, "images lie in Z[C]", check.ok, check.detail.str()};
}

// 4. p-adic lift independence and coherence -----------------------------------------
CriterionResult padic_images(const AcceptanceConfig& cfg, const MemberPool& pool) {
  std::mt19937_64 rng(cfg.seed + 4);
  Check check;
  const auto& members = pool.by_dimension[1];  // d = 2, 3, 6
  std::uint64_t pairs = 0;
  for (long p : {2L, 3L}) {
    for (unsigned long m = 1; m <= 6; ++m) {
      for (int t = 0; t < cfg.lift_pairs_per_case; ++t) {
        const RationalPoly& f = members[static_cast<std::size_t>(t) % members.size()];
        const unsigned long k = cancellation_modulus(f.denominator(), p, m);
        const Integer pk = pow(Integer(p), k);
        IntMatrix base = random_matrix(rng, 2, 1000);
        const PadicMatrix c(p, k, base);
        const IntMatrix lift1 = c.lift() + random_matrix(rng, 2, 50) * pk;
        const IntMatrix lift2 = c.lift() + random_matrix(rng, 2, 50) * pk;
        const auto s1 = padic_image_of_lift(f, lift1, p, m);
        const auto s2 = padic_image_of_lift(f, lift2, p, m);
        ++pairs;
        check.require(s1 == s2, "lift independence p = " + std::to_string(p) +
                                    ", m = " + std::to_string(m));
        check.require(s1 == padic_image(f, c, m), "least lift agrees");
        check.require(s1.coeffs.size() <= 2, "deg s < n");
        for (unsigned long lower = 1; lower < m; ++lower) {
          const PadicMatrix coarse(p, cancellation_modulus(f.denominator(), p, lower), base);
          check.require(padic_image(f, coarse, lower) == s1.truncate(lower),
                        "coherence m' = " + std::to_string(lower) + " < m = " + std::to_string(m));
        }
      }
    }
  }
  const auto s = padic_image(generate_family(2, 2), PadicMatrix(2, 5, IntMatrix{{0, -1}, {1, 0}}), 4);
  check.require(s.coeffs == std::vector<Integer>{15}, "fixed case s = [15] mod 2^4");
  check.detail << pairs << " lift pairs over p in {2,3}, m in 1..6, d in {2,3,6}; coherence "
               << "checked for every m' < m";
  return {4, "p-adic lift independence and coherence", check.ok, check.detail.str()};
}

// 5. Int[M_n] = M_n(Int(M_n)) ---------------------------------------------------------
CriterionResult matrix_coefficients(const AcceptanceConfig& cfg, const MemberPool& pool) {
  std::mt19937_64 rng(cfg.seed + 5);
  Check check;
  for (int t = 0; t < cfg.phi_round_trips; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t) % 3;
    const MatCoeffPoly f = random_matcoeff(rng, n, 4);
    check.require(phi_inv(phi(f)) == f, "phi_inv(phi(F)) = F");
    std::vector<RationalPoly> entries;
    for (std::size_t k = 0; k < n * n; ++k) entries.push_back(random_rational_poly(rng));
    MatOfPoly m(n);
    for (std::size_t k = 0; k < n * n; ++k) m(k / n, k % n) = entries[k];
    check.require(phi(phi_inv(m)) == m, "phi(phi_inv(M)) = M");
    const MatOfPoly image = phi(f);
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        check.require(sandwich_sum(f, j, k) == MatCoeffPoly::scalar(image(j - 1, k - 1), n),
                      "sandwich sum = c_jk I");
  }
  // Entrywise verdicts against direct evaluation.
  int member_elements = 0;
  int detected = 0;
  int nonmember_elements = 0;
  SampleOptions sample;
  for (int t = 0; t < 6; ++t) {
    sample.seed = cfg.seed + 50 + static_cast<std::uint64_t>(t);
    MatCoeffPoly f = random_member_matrix(rng, pool);
    if (t % 3 == 2) {
      // plant a non-member entry
      MatOfPoly m = phi(f);
      m(rng() % 2, rng() % 2) = canonicalize(IntPoly{0, -1, 1}, 2);
      f = phi_inv(m);
    }
    const auto verdict = member_matrix_poly(f);
    const auto report = sample_check_integrality(f, static_cast<std::uint64_t>(cfg.integrality_matrices), sample);
    if (verdict.member) {
      ++member_elements;
      check.require(report.integral && report.trials == static_cast<std::uint64_t>(cfg.integrality_matrices),
                    "member evaluates integrally at every sampled matrix");
    } else {
      ++nonmember_elements;
      detected += report.integral ? 0 : 1;
    }
  }
  check.require(member_elements >= 4, "enough member elements sampled");
  check.detail << cfg.phi_round_trips << " phi round trips with sandwich scalarization; "
               << member_elements << " member elements integral at " << cfg.integrality_matrices
               << " random matrices each; " << detected << "/" << nonmember_elements
               << " non-members caught by sampling";
  return {5, "matrix-coefficient isomorphism", check.ok, check.detail.str()};
}

// 6. Closure under multiplication ---------------------------------------------------
CriterionResult product_closure(const AcceptanceConfig& cfg, const MemberPool& pool) {
  std::mt19937_64 rng(cfg.seed + 6);
  Check check;
  SampleOptions sample;
  for (int t = 0; t < cfg.closure_pairs; ++t) {
    const MatCoeffPoly f = random_member_matrix(rng, pool);
    const MatCoeffPoly g = random_member_matrix(rng, pool);
    check.require(member_matrix_poly(f).member && member_matrix_poly(g).member, "factors are members");
    const MatCoeffPoly fg = mat_poly_mul(f, g);
    check.require(member_matrix_poly(fg).member, "product is a member");
    sample.seed = cfg.seed + 600 + static_cast<std::uint64_t>(t);
    check.require(sample_check_integrality(fg, 10, sample).integral, "product integral when sampled");
  }
  check.detail << cfg.closure_pairs << " member pairs; every product a member";
  return {6, "closure under multiplication", check.ok, check.detail.str()};
}

// 7. Monotonicity in n ---------------------------------------------------------------
CriterionResult monotonicity(const AcceptanceConfig& cfg, const MemberPool& pool) {
  std::mt19937_64 rng(cfg.seed + 7);
  std::uniform_int_distribution<long> den(2, 6);
  Check check;
  int semantic = 0;
  for (int t = 0; t < cfg.monotonicity_trials; ++t) {
    const int n = 2 + t % 2;
    const RationalPoly f = t % 2 == 0 ? pool.draw(rng, 1 + static_cast<int>(rng() % 3))
                                      : canonicalize(random_poly(rng, 8, 20), den(rng));
    const bool at_n = member_via_divisibility(f, n).member;
    for (int m = 1; m < n; ++m) {
      const auto at_m = member_via_divisibility(f, m);
      if (at_n) check.require(at_m.member, "member at n implies member at m < n");
      if (at_m.member) continue;
      // A non-integral value at m stays non-integral after padding with zeros.
      const IntMatrix small = companion(*at_m.witness);
      check.require(!integral_quotient(eval_poly_at_matrix(f.numerator(), small), f.denominator()),
                    "witness companion is non-integral");
      const IntMatrix padded = block_diag(small, IntMatrix(static_cast<std::size_t>(n - m)));
      check.require(!integral_quotient(eval_poly_at_matrix(f.numerator(), padded), f.denominator()),
                    "padded witness is non-integral at n");
      check.require(!at_n, "non-member at m is non-member at n");
      ++semantic;
    }
    // random matrices as well
    const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(n - 1), 9);
    if (!integral_quotient(eval_poly_at_matrix(f.numerator(), a), f.denominator())) {
      check.require(!integral_quotient(eval_poly_at_matrix(f.numerator(), block_diag(a, IntMatrix(1))),
                                       f.denominator()),
                    "block_diag(A, 0) non-integral");
    }
  }
  check.detail << cfg.monotonicity_trials << " trials, " << semantic
               << " block-diagonal witnesses carried up";
  return {7, "monotonicity in n", check.ok, check.detail.str()};
}

// 8. Irreducible lifts ---------------------------------------------------------------
CriterionResult irreducible_lifts(const AcceptanceConfig& cfg) {
  std::mt19937_64 rng(cfg.seed + 8);
  std::uniform_int_distribution<long> mod(2, 60);
  Check check;
  int brute = 0;
  for (int t = 0; t < cfg.irreducible_lifts; ++t) {
    const int n = 1 + t % 4;
    const IntPoly h = random_monic(rng, n, 100);
    const Integer d = mod(rng);
    const auto lift = irreducible_lift(h, d);
    check.require(lift.poly.is_monic() && lift.poly.degree() == n, "monic of degree n");
    check.require(reduce_mod(lift.poly - h, d).is_zero(), "congruent to h mod d");
    check.require(is_prime(lift.prime) && !divides(lift.prime, d), "certifying prime p does not divide d");
    check.require(is_irreducible_mod_p(lift.poly, lift.prime), "irreducible mod p");
    if (lift.prime < 50) {
      check.require(irreducible_brute_force(lift.poly, lift.prime), "exhaustive factor search");
      ++brute;
    }
  }
  check.detail << cfg.irreducible_lifts << " lifts, n in 1..4, d in 2..60; " << brute
               << " also certified by exhaustive factor search";
  return {8, "irreducible lift contract", check.ok, check.detail.str()};
}

template <class F>
CriterionResult timed(F&& run) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result;
  try {
    result = run();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

AcceptanceConfig AcceptanceConfig::quick() {
  AcceptanceConfig c;
  c.agreement_instances = 60;
  c.image_pairs = 30;
  c.lift_pairs_per_case = 5;
  c.phi_round_trips = 20;
  c.integrality_matrices = 50;
  c.closure_pairs = 10;
  c.monotonicity_trials = 30;
  c.irreducible_lifts = 30;
  return c;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
  const MemberPool pool;
  std::vector<CriterionResult> results;
  results.push_back(timed([&] { return three_oracle_agreement(config); }));
  results.back().id = 1;
  results.push_back(timed([&] { return known_members(config); }));
  results.back().id = 2;
  results.push_back(timed([&] { return images_in_z_c(config, pool); }));
  results.back().id = 3;
  results.push_back(timed([&] { return padic_images(config, pool); }));
  results.back().id = 4;
  results.push_back(timed([&] { return matrix_coefficients(config, pool); }));
  results.back().id = 5;
  results.push_back(timed([&] { return product_closure(config, pool); }));
  results.back().id = 6;
  results.push_back(timed([&] { return monotonicity(config, pool); }));
  results.back().id = 7;
  results.push_back(timed([&] { return irreducible_lifts(config); }));
  results.back().id = 8;
  // Criterion 1 carries a wall-clock bound.
  if (results[0].seconds >= 300.0) {
    results[0].passed = false;
    results[0].detail += "; exceeded 300 s";
  }
  return results;
}

}  // namespace ivpoly::selfcheck
