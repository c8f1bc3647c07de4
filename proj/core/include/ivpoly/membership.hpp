#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ivpoly/integer.hpp"
#include "ivpoly/poly.hpp"
#include "ivpoly/rational_poly.hpp"

namespace ivpoly {

enum class Oracle {
  kDivisibility,          // g divisible mod d by every monic residue of degree n
  kCompanion,             // g(companion(h)) = 0 mod d for every monic residue h
  kIrreducibleCompanion,  // same, at companions of irreducible lifts of h
};

std::string_view to_string(Oracle oracle);

/// Cap on the number of monic residue polynomials (d^n) a query may enumerate.
struct EnumerationBudget {
  static constexpr std::uint64_t kDefaultMaxCases = 1'000'000;
  std::uint64_t max_cases = kDefaultMaxCases;
};

struct MembershipOptions {
  EnumerationBudget budget;
  /// Keep scanning after the first failure and report every failing residue.
  bool all_witnesses = false;
  unsigned jobs = 1;
};

struct MembershipVerdict {
  bool member = true;
  /// First failing residue in enumeration order; present iff !member.
  std::optional<IntPoly> witness;
  Oracle oracle = Oracle::kDivisibility;
  /// Residues examined: up to and including the witness, or all of them.
  std::uint64_t cases = 0;
  /// Every failing residue in enumeration order, filled only with all_witnesses.
  std::vector<IntPoly> witnesses;
};

/// The d^n monic polynomials of degree n with coefficients in [0, d), in
/// lexicographic order on (a_0, ..., a_{n-1}): x^2, x^2+x, x^2+1, x^2+x+1, ...
class MonicResidues {
 public:
  /// Throws DegreeZero, BadModulus, or BudgetExceeded when d^n > max_cases.
  MonicResidues(int n, const Integer& d, EnumerationBudget budget = {});

  int degree() const { return n_; }
  const Integer& modulus() const { return d_; }
  std::uint64_t size() const { return size_; }
  IntPoly operator[](std::uint64_t index) const;

  class iterator {
   public:
    using value_type = IntPoly;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const MonicResidues* owner, std::uint64_t index) : owner_(owner), index_(index) {}
    IntPoly operator*() const { return (*owner_)[index_]; }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++index_;
      return old;
    }
    bool operator==(const iterator& o) const { return index_ == o.index_; }

   private:
    const MonicResidues* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  int n_;
  Integer d_;
  std::uint64_t size_;
};

inline MonicResidues enumerate_monic(int n, const Integer& d, EnumerationBudget budget = {}) {
  return MonicResidues(n, d, budget);
}

/// Whether h mod p is irreducible over F_p (Ben-Or: gcd(x^{p^i} - x, h) = 1
/// for i <= deg/2). Throws CompositeModulus, DegreeDrop, DegreeZero.
bool is_irreducible_mod_p(const IntPoly& h, const Integer& p);

struct IrreducibleLift {
  IntPoly poly;   // monic, congruent to h mod d, irreducible mod `prime`
  Integer prime;  // certifying prime, coprime to d
};

/// Monic k = h (mod d) of the same degree that is irreducible in Z[x],
/// certified by irreducibility modulo the least prime not dividing d.
IrreducibleLift irreducible_lift(const IntPoly& h, const Integer& d);

MembershipVerdict member_via_divisibility(const RationalPoly& f, int n,
                                          const MembershipOptions& options = {});
MembershipVerdict member_via_companion(const RationalPoly& f, int n,
                                       const MembershipOptions& options = {});
MembershipVerdict member_via_irreducible_companion(const RationalPoly& f, int n,
                                                   const MembershipOptions& options = {});

MembershipVerdict check_membership(const RationalPoly& f, int n, Oracle oracle,
                                   const MembershipOptions& options = {});

struct PrimePowerPart {
  Integer prime;
  unsigned exponent = 0;
  Integer prime_power;
  MembershipVerdict verdict;  // verdict for g / prime_power
};

/// Membership of g/d decided separately for each prime power dividing d.
/// Empty when d = 1.
std::vector<PrimePowerPart> prime_power_split(const RationalPoly& f, int n,
                                              const MembershipOptions& options = {});

bool all_members(const std::vector<PrimePowerPart>& parts);

/// prod_{i=1..n} (x^{p^i} - x) / p, e.g. (x^{p^2} - x)(x^p - x)/p for n = 2,
/// self-checked for membership in Int(M_n(Z)). Every monic polynomial of
/// degree n divides the numerator mod p.
/// Throws CompositeModulus, BudgetExceeded when p^n > budget, or
/// InternalAssertionFailure if the self-check fails.
RationalPoly generate_family(const Integer& p, int n = 2, EnumerationBudget budget = {});

/// Prime factorization by trial division, ascending.
std::vector<std::pair<Integer, unsigned>> factorize(Integer d);

}  // namespace ivpoly
