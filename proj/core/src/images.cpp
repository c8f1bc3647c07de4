#include "ivpoly/images.hpp"

#include <string>
#include <utility>

namespace ivpoly {

NotIntegerValuedError::NotIntegerValuedError(const RationalPoly& f, IntMatrix matrix,
                                             IntPoly remainder,
                                             std::optional<MembershipVerdict> recheck)
    : Error(ErrorCode::kNotIntegerValuedAtMatrix,
            f.to_string() + " is not integer-valued at [" + matrix.to_string() + "]"),
      matrix_(std::move(matrix)),
      remainder_(std::move(remainder)),
      recheck_(std::move(recheck)) {}

IntPoly reduced_representative(const RationalPoly& f, const IntMatrix& c) {
  const Integer& d = f.denominator();
  IntPoly rem = monic_divmod(f.numerator(), char_poly(c)).remainder;
  if (divides(d, rem.content())) return rem.exact_div(d);

  std::optional<MembershipVerdict> recheck;
  try {
    recheck = member_via_divisibility(f, static_cast<int>(c.size()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
  }
  if (recheck && recheck->member) {
    throw Error(ErrorCode::kInternalAssertionFailure,
                "member " + f.to_string() + " is not integral at [" + c.to_string() + "]");
  }
  throw NotIntegerValuedError(f, c, std::move(rem), std::move(recheck));
}

IntMatrix image_at(const RationalPoly& f, const IntMatrix& c) {
  return eval_poly_at_matrix(reduced_representative(f, c), c);
}

unsigned long cancellation_modulus(const Integer& d, const Integer& p, unsigned long m) {
  if (d == 0) throw Error(ErrorCode::kZeroDenominator, "cannot cancel zero");
  if (!is_prime(p)) throw Error(ErrorCode::kCompositeModulus, p.get_str() + " is not prime");
  return m + valuation(d, p);
}

PadicMatrix::PadicMatrix(Integer p, unsigned long precision, const IntMatrix& entries)
    : p_(std::move(p)), precision_(precision), entries_(entries.size()) {
  if (!is_prime(p_)) throw Error(ErrorCode::kCompositeModulus, p_.get_str() + " is not prime");
  if (precision_ == 0) throw Error(ErrorCode::kInsufficientPrecision, "precision must be >= 1");
  const Integer mod = modulus();
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) entries_(i, j) = mod_floor(entries(i, j), mod);
}

PadicPolyApprox PadicPolyApprox::truncate(unsigned long m) const {
  PadicPolyApprox out{p, m, {}};
  const Integer mod = out.modulus();
  for (const auto& c : coeffs) out.coeffs.push_back(mod_floor(c, mod));
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return out;
}

PadicPolyApprox padic_image_of_lift(const RationalPoly& f, const IntMatrix& lift,
                                    const Integer& p, unsigned long m) {
  if (m == 0) throw Error(ErrorCode::kInsufficientPrecision, "target precision must be >= 1");
  const IntPoly r = reduced_representative(f, lift);
  PadicPolyApprox exact{p, 0, {r.coeffs().begin(), r.coeffs().end()}};
  return exact.truncate(m);
}

PadicPolyApprox padic_image(const RationalPoly& f, const PadicMatrix& c, unsigned long m) {
  const unsigned long needed = cancellation_modulus(f.denominator(), c.prime(), m);
  if (c.precision() < needed) {
    throw Error(ErrorCode::kInsufficientPrecision,
                "matrix known to precision " + std::to_string(c.precision()) + ", need " +
                    std::to_string(needed));
  }
  return padic_image_of_lift(f, c.lift(), c.prime(), m);
}

}  // namespace ivpoly
