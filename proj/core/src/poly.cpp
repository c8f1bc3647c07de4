#include "ivpoly/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "ivpoly/error.hpp"

namespace ivpoly {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) {
  return IntPoly(std::vector<Integer>{c});
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> coeffs(k + 1, Integer(0));
  coeffs[k] = c;
  return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

Integer IntPoly::operator()(const Integer& a) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it;
  }
  return acc;
}

IntPoly IntPoly::pow(unsigned exponent) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::exact_div(const Integer& d) const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  return os << p.to_string();
}

DivMod monic_divmod(const IntPoly& g, const IntPoly& h) {
  if (!h.is_monic()) {
    throw Error(ErrorCode::kNonMonicDivisor,
                "divisor " + h.to_string() + " is not monic");
  }
  const int dh = h.degree();
  if (g.degree() < dh) return {IntPoly{}, g};

  std::vector<Integer> rem(g.coeffs().begin(), g.coeffs().end());
  std::vector<Integer> quot(static_cast<std::size_t>(g.degree() - dh + 1), Integer(0));
  auto hc = h.coeffs();
  for (int k = g.degree(); k >= dh; --k) {
    const Integer lead = rem[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    const auto shift = static_cast<std::size_t>(k - dh);
    quot[shift] = lead;
    for (std::size_t i = 0; i < hc.size(); ++i) rem[shift + i] -= lead * hc[i];
  }
  rem.resize(static_cast<std::size_t>(dh));
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

}  // namespace ivpoly
