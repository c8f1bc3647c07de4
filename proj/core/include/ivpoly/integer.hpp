#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ivpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Least nonnegative residue of `a` modulo `m` (m > 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

/// p-adic valuation of a nonzero integer.
inline unsigned long valuation(const Integer& a, const Integer& p) {
  Integer rest = a;
  unsigned long v = 0;
  while (rest != 0 && divides(p, rest)) {
    rest /= p;
    ++v;
  }
  return v;
}

/// Deterministic for the sizes used here; GMP's probabilistic test beyond.
inline bool is_prime(const Integer& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

inline Integer next_prime(const Integer& p) {
  Integer r;
  mpz_nextprime(r.get_mpz_t(), p.get_mpz_t());
  return r;
}

/// Modular inverse of `a` modulo `m`; requires gcd(a, m) = 1.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool fits_int64(const Integer& a) {
  return a.fits_slong_p();
}

inline std::string to_string(const Integer& a) { return a.get_str(); }

}  // namespace ivpoly
