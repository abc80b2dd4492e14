#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dlie/operators.hpp"

namespace dlie {

// Built-in operator catalog. Each entry is a lambda-skew-symmetric
// Rota-Baxter operator of the listed weight; the tables are oriented so that
// the induced double bracket matches the classical presentations of these
// structures (see catalog.cpp for the exact unit tables).
//
//   ex1  weight  1, any n >= 2: e_ij -> -e_ij (i<j), 0 (i>j), sum of lower
//        diagonal units past i (i=j)
//   ex2  weight  1, any n >= 2: transpose companion of ex1
//   ex3  weight -1, n = 3 only: the three-dimensional bracket table
//   ex4  weight  1, any n >= 2: diagonal-shift operator (ascending shifts on
//        and above the diagonal, descending below)
MatrixOperator catalog(std::string_view name, int n);

std::vector<std::string> catalog_names();

// The weight at which the named operator satisfies the Rota-Baxter and
// skew-symmetry identities.
Rational catalog_weight(std::string_view name);

}  // namespace dlie
