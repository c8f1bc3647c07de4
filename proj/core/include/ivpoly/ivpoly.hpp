#pragma once

#include "ivpoly/error.hpp"
#include "ivpoly/images.hpp"
#include "ivpoly/integer.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/matrix_poly.hpp"
#include "ivpoly/membership.hpp"
#include "ivpoly/parse.hpp"
#include "ivpoly/poly.hpp"
#include "ivpoly/rational_poly.hpp"
#include "ivpoly/residue_matrix.hpp"
#include "ivpoly/residue_poly.hpp"
