#include "ivpoly/membership.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "ivpoly/error.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/residue_matrix.hpp"
#include "ivpoly/residue_poly.hpp"

namespace ivpoly {

std::string_view to_string(Oracle oracle) {
  switch (oracle) {
    case Oracle::kDivisibility: return "divisibility";
    case Oracle::kCompanion: return "companion";
    case Oracle::kIrreducibleCompanion: return "irreducible-companion";
  }
  return "unknown";
}

// --- enumeration -----------------------------------------------------------

MonicResidues::MonicResidues(int n, const Integer& d, EnumerationBudget budget)
    : n_(n), d_(d), size_(0) {
  if (n < 1) throw Error(ErrorCode::kDegreeZero, "degree must be >= 1");
  if (d < 2) throw Error(ErrorCode::kBadModulus, "modulus must be >= 2, got " + d.get_str());
  const Integer count = pow(d, static_cast<unsigned long>(n));
  if (count > Integer(std::to_string(budget.max_cases))) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration of " + count.get_str() + " monic residues exceeds budget of " +
                    std::to_string(budget.max_cases));
  }
  size_ = count.get_ui();
}

IntPoly MonicResidues::operator[](std::uint64_t index) const {
  std::vector<Integer> coeffs(static_cast<std::size_t>(n_) + 1, Integer(0));
  Integer rest(std::to_string(index));
  for (int i = n_ - 1; i >= 0; --i) {
    mpz_fdiv_qr(rest.get_mpz_t(), coeffs[static_cast<std::size_t>(i)].get_mpz_t(),
                rest.get_mpz_t(), d_.get_mpz_t());
  }
  coeffs.back() = 1;
  return IntPoly(std::move(coeffs));
}

// --- arithmetic in F_p[x] ---------------------------------------------------

namespace {

using FpPoly = std::vector<Integer>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// a mod h, h monic.
void fp_reduce(FpPoly& a, const FpPoly& h, const Integer& p) {
  const std::size_t dh = h.size() - 1;
  for (std::size_t k = a.size(); k-- > dh;) {
    const Integer lead = a[k];
    if (lead == 0) continue;
    const std::size_t shift = k - dh;
    for (std::size_t i = 0; i <= dh; ++i) a[shift + i] = mod_floor(a[shift + i] - lead * h[i], p);
  }
  if (a.size() > dh) a.resize(dh);
  fp_trim(a);
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& h, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (auto& c : out) c = mod_floor(c, p);
  fp_reduce(out, h, p);
  return out;
}

FpPoly fp_powmod(FpPoly base, Integer e, const FpPoly& h, const Integer& p) {
  FpPoly result{Integer(1)};
  fp_reduce(result, h, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = fp_mulmod(result, base, h, p);
    e >>= 1;
    if (e > 0) base = fp_mulmod(base, base, h, p);
  }
  return result;
}

/// Remainder of a by b over the field F_p (b nonzero).
FpPoly fp_rem(FpPoly a, const FpPoly& b, const Integer& p) {
  const Integer inv = inverse_mod(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer factor = mod_floor(a.back() * inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod_floor(a[shift + i] - factor * b[i], p);
    fp_trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, const Integer& p) {
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// --- case scan shared by the oracles -------------------------------------

struct ScanResult {
  std::optional<std::uint64_t> first_failure;
  std::vector<std::uint64_t> failures;
  std::uint64_t cases = 0;
};

/// Runs `fails` over [0, total). Without collect_all, stops at the least
/// failing index; the result is independent of the worker count.
ScanResult scan_cases(std::uint64_t total, const std::function<bool(std::uint64_t)>& fails,
                      bool collect_all, unsigned jobs) {
  ScanResult result;
  if (jobs <= 1 || total < 2) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (!fails(i)) continue;
      if (!result.first_failure) result.first_failure = i;
      result.failures.push_back(i);
      if (!collect_all) break;
    }
  } else {
    constexpr std::uint64_t kBlock = 32;
    std::atomic<std::uint64_t> next_block{0};
    std::atomic<std::uint64_t> best{total};
    std::mutex mu;
    std::exception_ptr error;
    auto worker = [&] {
      std::vector<std::uint64_t> local;
      try {
        for (;;) {
          const std::uint64_t start = next_block.fetch_add(kBlock);
          if (start >= total) break;
          if (!collect_all && start > best.load()) break;
          const std::uint64_t stop = std::min(total, start + kBlock);
          for (std::uint64_t i = start; i < stop; ++i) {
            if (!collect_all && i > best.load()) break;
            if (!fails(i)) continue;
            local.push_back(i);
            std::uint64_t seen = best.load();
            while (i < seen && !best.compare_exchange_weak(seen, i)) {
            }
            if (!collect_all) break;
          }
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
      std::lock_guard lock(mu);
      result.failures.insert(result.failures.end(), local.begin(), local.end());
    };
    {
      std::vector<std::jthread> pool;
      const unsigned count = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
      for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    std::sort(result.failures.begin(), result.failures.end());
    if (!result.failures.empty()) result.first_failure = result.failures.front();
    if (!collect_all && result.failures.size() > 1) result.failures.resize(1);
  }
  if (collect_all || !result.first_failure) {
    result.cases = total;
  } else {
    result.cases = *result.first_failure + 1;
  }
  return result;
}

MembershipVerdict run_oracle(const RationalPoly& f, int n, Oracle oracle,
                             const MembershipOptions& options,
                             const std::function<bool(const IntPoly&)>& fails) {
  MembershipVerdict verdict;
  verdict.oracle = oracle;
  if (n < 1) throw Error(ErrorCode::kDegreeZero, "dimension n must be >= 1");
  if (f.is_integral()) return verdict;

  const MonicResidues residues(n, f.denominator(), options.budget);
  const ScanResult scan = scan_cases(
      residues.size(), [&](std::uint64_t i) { return fails(residues[i]); },
      options.all_witnesses, options.jobs);
  verdict.cases = scan.cases;
  if (scan.first_failure) {
    verdict.member = false;
    verdict.witness = residues[*scan.first_failure];
    if (options.all_witnesses) {
      for (std::uint64_t i : scan.failures) verdict.witnesses.push_back(residues[i]);
    }
  }
  return verdict;
}

void check_prime(const Integer& p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kCompositeModulus, p.get_str() + " is not prime");
  }
}

}  // namespace

// --- irreducibility ----------------------------------------------------------

bool is_irreducible_mod_p(const IntPoly& h, const Integer& p) {
  check_prime(p);
  if (h.degree() < 1) throw Error(ErrorCode::kDegreeZero, "degree must be >= 1");
  const Integer lead = mod_floor(h.leading(), p);
  if (lead == 0) {
    throw Error(ErrorCode::kDegreeDrop,
                "leading coefficient of " + h.to_string() + " vanishes mod " + p.get_str());
  }
  const int n = h.degree();
  if (n == 1) return true;

  const Integer inv = inverse_mod(lead, p);
  FpPoly hp;
  for (const auto& c : h.coeffs()) hp.push_back(mod_floor(c * inv, p));

  const FpPoly x{Integer(0), Integer(1)};
  FpPoly frob = x;  // x^{p^i} mod h
  for (int i = 1; i <= n / 2; ++i) {
    frob = fp_powmod(frob, p, hp, p);
    FpPoly diff = frob;
    if (diff.size() < 2) diff.resize(2, Integer(0));
    diff[1] = mod_floor(diff[1] - 1, p);
    fp_trim(diff);
    if (diff.empty()) return false;  // h divides x^{p^i} - x
    if (fp_gcd(hp, diff, p).size() > 1) return false;
  }
  return true;
}

IrreducibleLift irreducible_lift(const IntPoly& h, const Integer& d) {
  if (h.degree() < 1) throw Error(ErrorCode::kDegreeZero, "degree must be >= 1");
  if (!h.is_monic()) throw Error(ErrorCode::kNonMonic, h.to_string() + " is not monic");
  if (d < 2) throw Error(ErrorCode::kBadModulus, "modulus must be >= 2, got " + d.get_str());

  const auto n = static_cast<std::size_t>(h.degree());
  std::vector<Integer> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = mod_floor(h.coeff(i), d);

  // Candidates k_i = base_i + d*t_i with t in [0, p)^n, t_0 fastest: these are
  // exactly the CRT representatives in [0, d*p) of (h mod d, u mod p) for every
  // residue u mod p, and some u is irreducible.
  for (Integer p = 2;; p = next_prime(p)) {
    if (divides(p, d)) continue;
    std::vector<Integer> t(n, Integer(0));
    for (;;) {
      std::vector<Integer> coeffs(n + 1);
      for (std::size_t i = 0; i < n; ++i) coeffs[i] = base[i] + d * t[i];
      coeffs[n] = 1;
      IntPoly k(std::move(coeffs));
      if (is_irreducible_mod_p(k, p)) return {std::move(k), p};
      std::size_t i = 0;
      while (i < n) {
        t[i] += 1;
        if (t[i] < p) break;
        t[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
}

// --- the three oracles -------------------------------------------------------

MembershipVerdict member_via_divisibility(const RationalPoly& f, int n,
                                          const MembershipOptions& options) {
  const Integer& d = f.denominator();
  const IntPoly g = f.is_integral() ? IntPoly{} : reduce_mod(f.numerator(), d).lift();
  return run_oracle(f, n, Oracle::kDivisibility, options, [&](const IntPoly& h) {
    return !reduce_mod(monic_divmod(g, h).remainder, d).is_zero();
  });
}

MembershipVerdict member_via_companion(const RationalPoly& f, int n,
                                       const MembershipOptions& options) {
  const Integer& d = f.denominator();
  const std::optional<ResiduePoly> g =
      f.is_integral() ? std::nullopt : std::optional(reduce_mod(f.numerator(), d));
  return run_oracle(f, n, Oracle::kCompanion, options, [&](const IntPoly& h) {
    return !eval_poly_at_matrix(*g, ResidueMatrix(companion(h), d)).is_zero();
  });
}

MembershipVerdict member_via_irreducible_companion(const RationalPoly& f, int n,
                                                   const MembershipOptions& options) {
  const Integer& d = f.denominator();
  const IntPoly& g = f.numerator();
  return run_oracle(f, n, Oracle::kIrreducibleCompanion, options, [&](const IntPoly& h) {
    const IntMatrix value = eval_poly_at_matrix(g, companion(irreducible_lift(h, d).poly));
    for (std::size_t i = 0; i < value.size(); ++i)
      for (std::size_t j = 0; j < value.size(); ++j)
        if (!divides(d, value(i, j))) return true;
    return false;
  });
}

MembershipVerdict check_membership(const RationalPoly& f, int n, Oracle oracle,
                                   const MembershipOptions& options) {
  switch (oracle) {
    case Oracle::kDivisibility: return member_via_divisibility(f, n, options);
    case Oracle::kCompanion: return member_via_companion(f, n, options);
    case Oracle::kIrreducibleCompanion: return member_via_irreducible_companion(f, n, options);
  }
  throw Error(ErrorCode::kInternalAssertionFailure, "unknown oracle");
}

// --- prime-power split -------------------------------------------------------

std::vector<std::pair<Integer, unsigned>> factorize(Integer d) {
  std::vector<std::pair<Integer, unsigned>> factors;
  d = abs(d);
  for (Integer p = 2; p * p <= d; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (divides(p, d)) {
      d /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (d > 1) factors.emplace_back(d, 1);
  return factors;
}

std::vector<PrimePowerPart> prime_power_split(const RationalPoly& f, int n,
                                              const MembershipOptions& options) {
  std::vector<PrimePowerPart> parts;
  for (auto& [p, e] : factorize(f.denominator())) {
    PrimePowerPart part;
    part.prime = p;
    part.exponent = e;
    part.prime_power = pow(p, e);
    part.verdict = member_via_divisibility(canonicalize(f.numerator(), part.prime_power), n,
                                           options);
    parts.push_back(std::move(part));
  }
  return parts;
}

bool all_members(const std::vector<PrimePowerPart>& parts) {
  return std::all_of(parts.begin(), parts.end(),
                     [](const PrimePowerPart& part) { return part.verdict.member; });
}

// --- classical family --------------------------------------------------------

RationalPoly generate_family(const Integer& p, int n, EnumerationBudget budget) {
  check_prime(p);
  if (n < 1) throw Error(ErrorCode::kDegreeZero, "dimension n must be >= 1");
  // The self-check enumerates p^n residues; the degree grows like p^n too.
  if (pow(p, static_cast<unsigned long>(n)) > Integer(std::to_string(budget.max_cases))) {
    throw Error(ErrorCode::kBudgetExceeded, "family self-check for p = " + p.get_str() +
                                                ", n = " + std::to_string(n) +
                                                " exceeds budget of " +
                                                std::to_string(budget.max_cases));
  }
  const IntPoly x = IntPoly::x();
  IntPoly g{1};
  for (int i = 1; i <= n; ++i) {
    g *= IntPoly::monomial(1, pow(p, static_cast<unsigned long>(i)).get_ui()) - x;
  }
  RationalPoly f = canonicalize(g, p);
  MembershipOptions options;
  options.budget = budget;
  if (!member_via_divisibility(f, n, options).member) {
    throw Error(ErrorCode::kInternalAssertionFailure,
                "generated family element " + f.to_string() + " failed its membership check");
  }
  return f;
}

}  // namespace ivpoly
