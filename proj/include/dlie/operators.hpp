#pragma once

#include <vector>

#include "dlie/matrix.hpp"
#include "dlie/rational.hpp"

namespace dlie {

// Linear operator on M_n(Q), stored by its values on the matrix units and
// extended linearly. Conventions used throughout the library:
//   - units act on column vectors: e_ij f_k = delta_jk f_i;
//   - the trace-form dual of e_ij is e_ji.
class MatrixOperator {
public:
    explicit MatrixOperator(int n);  // zero operator

    static MatrixOperator identity(int n);

    int n() const { return n_; }
    int dim() const { return n_ * n_; }  // N = n^2

    const Matrix& on_unit(int i, int j) const { return val_[std::size_t(i) * n_ + j]; }
    void set_unit(int i, int j, Matrix m);

    Matrix apply(const Matrix& x) const;

    // N x N matrix in the unit basis (column u = flattened image of unit u).
    Matrix as_matrix() const;
    static MatrixOperator from_matrix(int n, const Matrix& m);

    MatrixOperator& operator+=(const MatrixOperator& o);
    MatrixOperator& operator*=(const Rational& c);
    friend MatrixOperator operator+(MatrixOperator a, const MatrixOperator& b) { return a += b; }
    friend MatrixOperator operator*(MatrixOperator a, const Rational& c) { return a *= c; }
    friend bool operator==(const MatrixOperator& a, const MatrixOperator& b);

private:
    int n_;
    std::vector<Matrix> val_;
};

// Witness of a failed check on matrix units: the pair (e_{xi,xj}, e_{yi,yj})
// together with the exact defect. Unary checks set yi = yj = -1.
struct UnitWitness {
    int xi, xj;
    int yi, yj;
    Matrix defect;
};

struct RBReport {
    bool passed = true;
    std::vector<UnitWitness> witnesses;
};

// tr(xy); symmetric and nondegenerate on M_n.
Rational trace_pairing(const Matrix& x, const Matrix& y);

// Conjugate operator relative to the trace form: <R(x),y> = <x,R*(y)>.
MatrixOperator adjoint(const MatrixOperator& r);

// theta_R = R + R* + lambda id.
MatrixOperator theta(const MatrixOperator& r, const Rational& lambda);

// Rota-Baxter identity R(x)R(y) = R(R(x)y + xR(y) + lambda xy), checked on
// all unit pairs; defects are R(x)R(y) - R(...).
RBReport is_rb(const MatrixOperator& r, const Rational& lambda);

// lambda-skew-symmetry: theta_R(x) = lambda tr(x) E on all units.
RBReport is_lambda_skew(const MatrixOperator& r, const Rational& lambda);

// -R - lambda id.
MatrixOperator transform_tilde(const MatrixOperator& r, const Rational& lambda);
// psi^{-1} R psi for the conjugation automorphism psi(x) = g x g^{-1};
// throws std::invalid_argument when g is singular.
MatrixOperator transform_conj(const MatrixOperator& r, const Matrix& g);
// x -> R(x^T)^T (conjugation by the transpose antiautomorphism).
MatrixOperator transform_transpose(const MatrixOperator& r);
// -R - lambda id + lambda tr(.) E; equals adjoint(R) when R is lambda-skew.
MatrixOperator transform_adjoint_skew(const MatrixOperator& r, const Rational& lambda);

// Generalized eigenspace decomposition M_n = ker(R^N) + ker(R + lambda id)^N,
// N = n^2, with i2prime = ker(R + lambda id). Requires lambda != 0. Throws
// std::runtime_error when the two kernels do not fill M_n (R is then not a
// Rota-Baxter operator of weight lambda).
struct SpectralSplit {
    std::vector<Matrix> i1;
    std::vector<Matrix> i2;
    std::vector<Matrix> i2prime;
};
SpectralSplit split_spectral(const MatrixOperator& r, const Rational& lambda);

}  // namespace dlie
