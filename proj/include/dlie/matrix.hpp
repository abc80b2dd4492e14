#pragma once

#include <optional>
#include <vector>

#include "dlie/rational.hpp"

namespace dlie {

// Dense matrix over the rationals, row-major, dimensions fixed at
// construction. Equality is entry-wise exact.
class Matrix {
public:
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    // Matrix unit e_ij (0-based): single 1 at row i, column j.
    static Matrix unit(int n, int i, int j);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
    Rational& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& c);

    Matrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
    friend Matrix operator-(const Matrix& a) { return a * Rational(-1); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

Matrix matrix_pow(const Matrix& m, unsigned k);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Matrix& m);

// Basis of the nullspace as column vectors, each normalized so that its
// first nonzero entry is 1, ordered by free column. Empty iff injective.
std::vector<Matrix> kernel(const Matrix& m);

// One exact solution of A x = b (b may have several columns), free
// variables set to zero; std::nullopt if the system is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

// Basis of ker(M^k); M must be square.
std::vector<Matrix> iterated_kernel(const Matrix& m, unsigned k);

}  // namespace dlie
