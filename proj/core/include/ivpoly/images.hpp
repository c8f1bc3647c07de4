#pragma once

#include <optional>
#include <vector>

#include "ivpoly/error.hpp"
#include "ivpoly/integer.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/membership.hpp"
#include "ivpoly/poly.hpp"
#include "ivpoly/rational_poly.hpp"

namespace ivpoly {

/// Raised when the remainder of g by chi_C is not divisible by d, i.e. g(C)/d
/// is not integral. Carries the offending matrix and, when the re-check fit in
/// the default budget, the scalar verdict confirming f is not a member.
class NotIntegerValuedError : public Error {
 public:
  NotIntegerValuedError(const RationalPoly& f, IntMatrix matrix, IntPoly remainder,
                        std::optional<MembershipVerdict> recheck);

  const IntMatrix& matrix() const { return matrix_; }
  const IntPoly& remainder() const { return remainder_; }
  const std::optional<MembershipVerdict>& recheck() const { return recheck_; }

 private:
  IntMatrix matrix_;
  IntPoly remainder_;
  std::optional<MembershipVerdict> recheck_;
};

/// The r in Z[x] with deg r < n and g = q*chi_C + d*r, so that f(C) = r(C).
/// f is trusted to be a member; when it is not at C the membership is
/// re-checked and NotIntegerValuedError is thrown.
IntPoly reduced_representative(const RationalPoly& f, const IntMatrix& c);

/// f(C) computed as r(C) with r the reduced representative.
IntMatrix image_at(const RationalPoly& f, const IntMatrix& c);

/// k = m + v_p(d): d*c = 0 mod p^k implies c = 0 mod p^m.
/// Throws ZeroDenominator, CompositeModulus.
unsigned long cancellation_modulus(const Integer& d, const Integer& p, unsigned long m);

/// Matrix over Z_p known to precision p^k; entries stored in [0, p^k).
class PadicMatrix {
 public:
  /// Throws CompositeModulus if p is not prime, InsufficientPrecision if k = 0.
  PadicMatrix(Integer p, unsigned long precision, const IntMatrix& entries);

  const Integer& prime() const { return p_; }
  unsigned long precision() const { return precision_; }
  Integer modulus() const { return pow(p_, precision_); }
  std::size_t size() const { return entries_.size(); }
  /// Least nonnegative lift.
  const IntMatrix& lift() const { return entries_; }

 private:
  Integer p_;
  unsigned long precision_;
  IntMatrix entries_;
};

/// s in (Z/p^m)[x] with deg s < n, coefficients in [0, p^m), trailing zeros trimmed.
struct PadicPolyApprox {
  Integer p;
  unsigned long precision = 0;
  std::vector<Integer> coeffs;

  Integer modulus() const { return pow(p, precision); }
  /// The same approximation at a lower precision.
  PadicPolyApprox truncate(unsigned long m) const;

  friend bool operator==(const PadicPolyApprox&, const PadicPolyApprox&) = default;
};

/// f(C) = s(C) mod p^m for the matrix C known mod p^k. Requires
/// k >= cancellation_modulus(d, p, m), else InsufficientPrecision.
PadicPolyApprox padic_image(const RationalPoly& f, const PadicMatrix& c, unsigned long m);

/// The same computation on an explicit integer lift; the result only depends
/// on the lift modulo p^{cancellation_modulus(d, p, m)}.
PadicPolyApprox padic_image_of_lift(const RationalPoly& f, const IntMatrix& lift,
                                    const Integer& p, unsigned long m);

}  // namespace ivpoly
