#include "ivpoly/residue_poly.hpp"

#include <algorithm>
#include <string>

#include "ivpoly/error.hpp"

namespace ivpoly {

namespace {

void check_modulus(const Integer& d) {
  if (d < 2) throw Error(ErrorCode::kBadModulus, "modulus must be >= 2, got " + d.get_str());
}

void check_same_modulus(const ResiduePoly& a, const ResiduePoly& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kBadModulus, "residue polynomials over different moduli");
  }
}

}  // namespace

ResiduePoly::ResiduePoly(Integer modulus, std::span<const Integer> coeffs)
    : modulus_(std::move(modulus)) {
  check_modulus(modulus_);
  coeffs_.reserve(coeffs.size());
  for (const auto& c : coeffs) coeffs_.push_back(mod_floor(c, modulus_));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ResiduePoly operator+(const ResiduePoly& a, const ResiduePoly& b) {
  check_same_modulus(a, b);
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return ResiduePoly(a.modulus_, std::move(out));
}

ResiduePoly operator*(const ResiduePoly& a, const ResiduePoly& b) {
  check_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return ResiduePoly(a.modulus_, std::vector<Integer>{});
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ResiduePoly(a.modulus_, std::move(out));
}

ResiduePoly reduce_mod(const IntPoly& g, const Integer& d) {
  return ResiduePoly(d, g.coeffs());
}

IntPoly crt_coeffwise(std::span<const ResiduePoly> residues, int degree) {
  if (degree < 1) throw Error(ErrorCode::kDegreeZero, "target degree must be >= 1");
  const auto n = static_cast<std::size_t>(degree);
  std::vector<Integer> acc(n, Integer(0));
  Integer modulus = 1;
  for (const auto& r : residues) {
    if (r.degree() > degree || (r.degree() == degree && r.coeff(n) != 1)) {
      throw Error(ErrorCode::kNonMonic,
                  "residue is not monic of degree " + std::to_string(degree));
    }
    if (gcd(modulus, r.modulus()) != 1) {
      throw Error(ErrorCode::kNonCoprimeModuli,
                  "modulus " + r.modulus().get_str() + " shares a factor with " +
                      modulus.get_str());
    }
    // x = acc + modulus * t with t = (r - acc) * modulus^{-1} mod r.modulus
    const Integer inv = inverse_mod(modulus, r.modulus());
    for (std::size_t i = 0; i < n; ++i) {
      Integer t = mod_floor((r.coeff(i) - acc[i]) * inv, r.modulus());
      acc[i] += modulus * t;
    }
    modulus *= r.modulus();
  }
  acc.emplace_back(1);
  return IntPoly(std::move(acc));
}

}  // namespace ivpoly
