#include "dlie/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace dlie {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::unit(int n, int i, int j) {
    Matrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
    for (auto& x : e_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int t = 0; t < a.cols_; ++t) {
            const Rational& x = a.at(i, t);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& y = b.at(t, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Rational Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix matrix_pow(const Matrix& m, unsigned k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("power of a non-square matrix");
    Matrix acc = Matrix::identity(m.rows());
    Matrix base = m;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<Matrix> kernel(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Matrix> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Matrix v(m.cols(), 1);
        v.at(f, 0) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v.at(pivots[k], 0) = -r.at(int(k), f);
        // normalize: first nonzero entry 1
        Rational lead;
        for (int i = 0; i < m.cols(); ++i)
            if (!v.at(i, 0).is_zero()) {
                lead = v.at(i, 0);
                break;
            }
        basis.push_back(v * (Rational(1) / lead));
    }
    return basis;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("dimension mismatch");
    Matrix aug(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    std::vector<int> pivots = rref(aug);
    // a pivot in the augmented block means inconsistency
    for (int c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (int j = 0; j < b.cols(); ++j) x.at(pivots[k], j) = aug.at(int(k), a.cols() + j);
    return x;
}

std::vector<Matrix> iterated_kernel(const Matrix& m, unsigned k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("iterated kernel of a non-square matrix");
    return kernel(matrix_pow(m, k));
}

}  // namespace dlie
