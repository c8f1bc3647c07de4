#pragma once

#include <string_view>

#include "ivpoly/matrix.hpp"
#include "ivpoly/poly.hpp"

namespace ivpoly {

/// Parses an integer polynomial in x, expanded exactly: "x^2+x+1",
/// "(x^4-x)*(x^2-x)", "3x^2 - 2(x+1)". Throws ParseError.
IntPoly parse_poly(std::string_view text);

/// Parses a row-major square matrix "0 -1 ; 1 -1". Throws ParseError.
IntMatrix parse_matrix(std::string_view text);

}  // namespace ivpoly
