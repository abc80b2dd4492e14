#include "dlie/operators.hpp"

#include <stdexcept>
#include <utility>

#include "dlie/subspace.hpp"

namespace dlie {

MatrixOperator::MatrixOperator(int n) : n_(n), val_(std::size_t(n) * n, Matrix(n, n)) {
    if (n <= 0) throw std::invalid_argument("operator size must be positive");
}

MatrixOperator MatrixOperator::identity(int n) {
    MatrixOperator r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.set_unit(i, j, Matrix::unit(n, i, j));
    return r;
}

void MatrixOperator::set_unit(int i, int j, Matrix m) {
    if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("image dimension mismatch");
    val_[std::size_t(i) * n_ + j] = std::move(m);
}

Matrix MatrixOperator::apply(const Matrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("argument dimension mismatch");
    Matrix out(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Rational& c = x.at(i, j);
            if (!c.is_zero()) out += on_unit(i, j) * c;
        }
    return out;
}

Matrix MatrixOperator::as_matrix() const {
    int N = dim();
    Matrix m(N, N);
    for (int u = 0; u < N; ++u) {
        const Matrix& img = val_[u];
        for (int p = 0; p < n_; ++p)
            for (int q = 0; q < n_; ++q) m.at(p * n_ + q, u) = img.at(p, q);
    }
    return m;
}

MatrixOperator MatrixOperator::from_matrix(int n, const Matrix& m) {
    if (m.rows() != n * n || m.cols() != n * n)
        throw std::invalid_argument("operator matrix must be n^2 x n^2");
    MatrixOperator r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix img(n, n);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) img.at(p, q) = m.at(p * n + q, i * n + j);
            r.set_unit(i, j, std::move(img));
        }
    return r;
}

MatrixOperator& MatrixOperator::operator+=(const MatrixOperator& o) {
    if (n_ != o.n_) throw std::invalid_argument("operator size mismatch");
    for (std::size_t k = 0; k < val_.size(); ++k) val_[k] += o.val_[k];
    return *this;
}

MatrixOperator& MatrixOperator::operator*=(const Rational& c) {
    for (auto& m : val_) m *= c;
    return *this;
}

bool operator==(const MatrixOperator& a, const MatrixOperator& b) {
    return a.n_ == b.n_ && a.val_ == b.val_;
}

Rational trace_pairing(const Matrix& x, const Matrix& y) { return (x * y).trace(); }

MatrixOperator adjoint(const MatrixOperator& r) {
    // <e_pq, R*(e_kl)> = <R(e_qp), e_kl>, so R*(e_kl)[p][q] = R(e_qp)[l][k].
    int n = r.n();
    MatrixOperator out(n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Matrix m(n, n);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) m.at(p, q) = r.on_unit(q, p).at(l, k);
            out.set_unit(k, l, std::move(m));
        }
    return out;
}

MatrixOperator theta(const MatrixOperator& r, const Rational& lambda) {
    MatrixOperator out = r;
    out += adjoint(r);
    out += MatrixOperator::identity(r.n()) * lambda;
    return out;
}

RBReport is_rb(const MatrixOperator& r, const Rational& lambda) {
    int n = r.n();
    RBReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix x = Matrix::unit(n, i, j);
            const Matrix& rx = r.on_unit(i, j);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Matrix y = Matrix::unit(n, k, l);
                    const Matrix& ry = r.on_unit(k, l);
                    Matrix inner = rx * y + x * ry;
                    if (!lambda.is_zero()) inner += (x * y) * lambda;
                    Matrix defect = rx * ry - r.apply(inner);
                    if (!defect.is_zero()) {
                        rep.passed = false;
                        rep.witnesses.push_back({i, j, k, l, std::move(defect)});
                    }
                }
        }
    return rep;
}

RBReport is_lambda_skew(const MatrixOperator& r, const Rational& lambda) {
    int n = r.n();
    MatrixOperator th = theta(r, lambda);
    RBReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix defect = th.on_unit(i, j);
            if (i == j) defect -= Matrix::identity(n) * lambda;
            if (!defect.is_zero()) {
                rep.passed = false;
                rep.witnesses.push_back({i, j, -1, -1, std::move(defect)});
            }
        }
    return rep;
}

MatrixOperator transform_tilde(const MatrixOperator& r, const Rational& lambda) {
    MatrixOperator out = r;
    out *= Rational(-1);
    out += MatrixOperator::identity(r.n()) * (-lambda);
    return out;
}

MatrixOperator transform_conj(const MatrixOperator& r, const Matrix& g) {
    int n = r.n();
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("psi dimension mismatch");
    auto inv = solve_linear(g, Matrix::identity(n));
    if (!inv) throw std::invalid_argument("singular conjugation matrix");
    MatrixOperator out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix x = Matrix::unit(n, i, j);
            out.set_unit(i, j, *inv * r.apply(g * x * *inv) * g);
        }
    return out;
}

MatrixOperator transform_transpose(const MatrixOperator& r) {
    int n = r.n();
    MatrixOperator out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set_unit(i, j, r.on_unit(j, i).transpose());
    return out;
}

MatrixOperator transform_adjoint_skew(const MatrixOperator& r, const Rational& lambda) {
    int n = r.n();
    MatrixOperator out = transform_tilde(r, lambda);
    for (int i = 0; i < n; ++i) {
        Matrix m = out.on_unit(i, i);
        m += Matrix::identity(n) * lambda;
        out.set_unit(i, i, std::move(m));
    }
    return out;
}

SpectralSplit split_spectral(const MatrixOperator& r, const Rational& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("split_spectral requires lambda != 0");
    int n = r.n();
    unsigned N = unsigned(r.dim());
    Matrix m = r.as_matrix();
    Matrix mshift = m;
    for (int i = 0; i < int(N); ++i) mshift.at(i, i) += lambda;

    auto to_mats = [n](const std::vector<Matrix>& cols) {
        std::vector<Matrix> out;
        out.reserve(cols.size());
        for (const auto& c : cols) {
            std::vector<Rational> v(std::size_t(n) * n);
            for (int i = 0; i < n * n; ++i) v[i] = c.at(i, 0);
            out.push_back(unflatten(n, v));
        }
        return out;
    };

    SpectralSplit s;
    s.i1 = to_mats(iterated_kernel(m, N));
    s.i2 = to_mats(iterated_kernel(mshift, N));
    s.i2prime = to_mats(kernel(mshift));
    if (s.i1.size() + s.i2.size() != N)
        throw std::runtime_error("spectral decomposition incomplete: not a Rota-Baxter operator of this weight");
    return s;
}

}  // namespace dlie
