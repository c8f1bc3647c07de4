#pragma once

#include <json.hpp>

#include "ivpoly/ivpoly.hpp"

namespace ivpoly::cli {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings. Both forms are accepted on input.
Json to_json(const Integer& value);
Integer integer_from_json(const Json& j);

/// {"coeffs":[a_0, a_1, ...]}
Json to_json(const IntPoly& g);
/// Accepts {"coeffs":[...]} or a bare coefficient array.
IntPoly poly_from_json(const Json& j);

/// {"num":{"coeffs":[...]},"den":d}
Json to_json(const RationalPoly& f);
/// Accepts {"num":...,"den":...} or anything poly_from_json accepts.
RationalPoly rational_poly_from_json(const Json& j);

/// {"n":2,"entries":[[...],[...]]}
Json to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j);

/// {"n":2,"coeffs":[{"entries":[[...]],"den":1}, ...]}, one matrix per degree.
Json to_json(const MatCoeffPoly& f);
MatCoeffPoly mat_coeff_poly_from_json(const Json& j);

/// {"n":2,"entries":[[{"num":...,"den":...}, ...], ...]}
Json to_json(const MatOfPoly& m);

Json to_json(const MembershipVerdict& v);

}  // namespace ivpoly::cli
