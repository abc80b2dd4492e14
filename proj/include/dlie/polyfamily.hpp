#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "dlie/bracket.hpp"
#include "dlie/tensor.hpp"

namespace dlie {

// Double brackets on F[t] realized at a truncation degree D: monomials
// t^0..t^D form the basis, index = exponent. Each family is given by its
// divided-difference numerator; the table stores the expanded geometric sums.
//
//   M1:  [[t^i, t^j]] = (t^j (x) t^{i+1} - t^i (x) t^{j+1}) / (t (x) 1 - 1 (x) t)
//   M2:  [[t^i, t^j]] = (t^{i+1} (x) t^j - t^{j+1} (x) t^i) / (t (x) 1 - 1 (x) t)
//   L2:  [[t^i, t^j]] = (t^i (x) t^j - t^j (x) t^i) / (t (x) 1 - 1 (x) t)
//
// M1 and M2 satisfy the weighted axioms at lambda = 1, L2 at lambda = 0.
enum class PolyFamily { M1, M2, L2 };

PolyFamily parse_family(const std::string& name);  // "M1" | "M2" | "L2"
std::string family_name(PolyFamily f);
Rational family_lambda(PolyFamily f);

struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The expanded bracket of (t^i, t^j) as a Tensor2 of dimension D+1. Throws
// TruncationOverflow if any term would exceed exponent D (cannot happen for
// i, j <= D; the guard backs the contract).
Tensor2 poly_bracket(PolyFamily f, int i, int j, int truncation);

// Full table on exponents 0..D.
FiniteBracket poly_bracket_table(PolyFamily f, int truncation);

struct PolyAxiomReport {
    bool passed = true;
    BracketReport2 anticom;
    BracketReport3 jacobi;
};
// Weighted anti-commutativity on all monomial pairs and the weighted Jacobi
// identity on all monomial triples within the truncation (every intermediate
// term of these families stays within it).
PolyAxiomReport check_poly_axioms(PolyFamily f, int truncation, int jobs = 1);

// Ideal test for U = span{t^g : g in degrees}.
IdealReport check_ideal_poly(PolyFamily f, const std::set<int>& degrees, int truncation);

// The shift xi(t^k) = t^{k+1}: checks (xi (x) xi)[[t^i,t^j]] = [[t^{i+1},t^{j+1}]]
// for all pairs with i, j < D.
BracketReport2 check_shift_iso(PolyFamily f, int truncation);

}  // namespace dlie
