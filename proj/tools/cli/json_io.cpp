#include "json_io.hpp"

#include <functional>

namespace ivpoly::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t dimension_from_json(const Json& j) {
  const Integer n = integer_from_json(field(j, "n"));
  if (n < 0 || !n.fits_ulong_p()) bad("\"n\" must be a non-negative integer");
  return n.get_ui();
}

Json matrix_rows(std::size_t n, const std::function<Json(std::size_t, std::size_t)>& entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(entry(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix rows_from_json(const Json& rows, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) bad("\"entries\" must have n rows");
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) bad("every row of \"entries\" must have n entries");
    for (std::size_t j = 0; j < n; ++j) a(i, j) = integer_from_json(rows[i][j]);
  }
  return a;
}

}  // namespace

Json to_json(const Integer& value) {
  if (fits_int64(value)) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      bad("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  bad("expected an integer, got " + j.dump());
}

Json to_json(const IntPoly& g) {
  Json coeffs = Json::array();
  for (const auto& c : g.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const Json& j) {
  const Json& coeffs = j.is_array() ? j : field(j, "coeffs");
  if (!coeffs.is_array()) bad("\"coeffs\" must be an array");
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(integer_from_json(c));
  return IntPoly(std::move(out));
}

Json to_json(const RationalPoly& f) {
  return Json{{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

RationalPoly rational_poly_from_json(const Json& j) {
  if (j.is_object() && j.contains("num")) {
    const Json* den = j.contains("den") ? &j.at("den") : nullptr;
    return canonicalize(poly_from_json(j.at("num")), den ? integer_from_json(*den) : Integer(1));
  }
  return RationalPoly(poly_from_json(j));
}

Json to_json(const IntMatrix& a) {
  return Json{{"n", a.size()},
              {"entries", matrix_rows(a.size(), [&](std::size_t i, std::size_t j) { return to_json(a(i, j)); })}};
}

IntMatrix matrix_from_json(const Json& j) {
  const std::size_t n = dimension_from_json(j);
  if (n == 0) bad("matrix dimension must be at least 1");
  return rows_from_json(field(j, "entries"), n);
}

Json to_json(const MatCoeffPoly& f) {
  const std::size_t n = f.size();
  Json coeffs = Json::array();
  for (const auto& a : f.coeffs()) {
    Integer den = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) den = lcm(den, Integer(a(i, j).get_den()));
    coeffs.push_back(Json{{"entries", matrix_rows(n,
                                                  [&](std::size_t i, std::size_t j) {
                                                    return to_json(Integer(a(i, j) * den));
                                                  })},
                          {"den", to_json(den)}});
  }
  return Json{{"n", n}, {"coeffs", std::move(coeffs)}};
}

MatCoeffPoly mat_coeff_poly_from_json(const Json& j) {
  const std::size_t n = dimension_from_json(j);
  if (n == 0) bad("matrix dimension must be at least 1");
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) bad("\"coeffs\" must be an array");
  std::vector<RatMatrix> out;
  for (const auto& c : coeffs) {
    const Integer den = c.contains("den") ? integer_from_json(c.at("den")) : Integer(1);
    if (den == 0) throw Error(ErrorCode::kZeroDenominator, "coefficient denominator is zero");
    RatMatrix a = to_rational(rows_from_json(field(c, "entries"), n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        a(r, s) /= Rational(den);
        a(r, s).canonicalize();
      }
    out.push_back(std::move(a));
  }
  return MatCoeffPoly(n, std::move(out));
}

Json to_json(const MatOfPoly& m) {
  return Json{{"n", m.size()},
              {"entries", matrix_rows(m.size(), [&](std::size_t i, std::size_t j) { return to_json(m(i, j)); })}};
}

Json to_json(const MembershipVerdict& v) {
  Json out{{"member", v.member},
           {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)},
           {"oracle", std::string(to_string(v.oracle))},
           {"cases", v.cases}};
  return out;
}

}  // namespace ivpoly::cli
