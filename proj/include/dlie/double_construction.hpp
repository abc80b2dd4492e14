#pragma once

#include <optional>

#include "dlie/operators.hpp"

namespace dlie {

// Element (a, b-bar) of the double space D_R(A) = A + A-bar, A = M_n(Q).
struct DoubleElement {
    Matrix plain;
    Matrix barred;

    DoubleElement(Matrix p, Matrix b);
    static DoubleElement zero(int n) { return {Matrix(n, n), Matrix(n, n)}; }
    static DoubleElement of_plain(Matrix a);
    static DoubleElement of_barred(Matrix a);

    DoubleElement& operator+=(const DoubleElement& o);
    friend DoubleElement operator+(DoubleElement a, const DoubleElement& b) { return a += b; }
    friend DoubleElement operator*(DoubleElement a, const Rational& c) {
        a.plain *= c;
        a.barred *= c;
        return a;
    }
    friend bool operator==(const DoubleElement& a, const DoubleElement& b) {
        return a.plain == b.plain && a.barred == b.barred;
    }
};

// Product on D_R(A):
//   (a + b-bar)(x + y-bar) = ax + R(ay) - aR(y) + R(bx) - R(b)x
//      + bar( ay + bx - R(b)y - bR(y) - lambda by ).
DoubleElement dr_product(const MatrixOperator& r, const Rational& lambda, const DoubleElement& x,
                         const DoubleElement& y);

// i(a) = a-bar + (lambda a + R(a));  j(a) = -a-bar - R(a);  i + j = lambda id.
DoubleElement i_map(const MatrixOperator& r, const Rational& lambda, const Matrix& a);
DoubleElement j_map(const MatrixOperator& r, const Rational& lambda, const Matrix& a);

// Basis of D_R(A): plain units first (index 1..N), then barred units
// (index N+1..2N), 1-based in witnesses.
struct DoubleTripleWitness {
    int x, y, z;
    DoubleElement defect;
};
struct AssocReport {
    bool passed = true;
    std::vector<DoubleTripleWitness> witnesses;
};
// Associativity of the product over all basis triples.
AssocReport check_assoc(const MatrixOperator& r, const Rational& lambda, int jobs = 1);

// Q(a + b-bar, c + d-bar) = tr(ad) + tr(bc).
Rational q_form(const DoubleElement& x, const DoubleElement& y);

// Invariance Q(xy, z) = Q(x, yz) over all basis triples. The result is
// cross-checked internally against the equivalent criterion
// theta_R(ab) = 0 for all unit products ab.
struct QInvarianceReport {
    bool invariant = true;
    std::optional<DoubleTripleWitness> witness;
};
QInvarianceReport check_q_invariance(const MatrixOperator& r, const Rational& lambda);

}  // namespace dlie
