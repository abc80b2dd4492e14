#include "dlie/bracket.hpp"

#include <stdexcept>

#include "dlie/parallel.hpp"

namespace dlie {

FiniteBracket::FiniteBracket(int dim)
    : dim_(dim), table_(std::size_t(dim) * dim, Tensor2(dim)) {
    if (dim <= 0) throw std::invalid_argument("bracket dimension must be positive");
}

void FiniteBracket::set_entry(int p, int q, Tensor2 t) {
    if (t.dim() != dim_) throw std::invalid_argument("tensor dimension mismatch");
    table_[std::size_t(p) * dim_ + q] = std::move(t);
}

Tensor2 FiniteBracket::eval(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    if (int(a.size()) != dim_ || int(b.size()) != dim_)
        throw std::invalid_argument("coordinate dimension mismatch");
    Tensor2 out(dim_);
    for (int p = 0; p < dim_; ++p) {
        if (a[p].is_zero()) continue;
        for (int q = 0; q < dim_; ++q) {
            if (b[q].is_zero()) continue;
            Tensor2 t = entry(p, q);
            t *= a[p] * b[q];
            out += t;
        }
    }
    return out;
}

FiniteBracket bracket_from_rb(const MatrixOperator& r) {
    int n = r.n();
    FiniteBracket b(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            Tensor2 t(n);
            for (int i = 0; i < n; ++i) {
                const Matrix& img = r.on_unit(p, i);  // R(e_pi)
                for (int m = 0; m < n; ++m) t.add_term(i, m, img.at(m, q));
            }
            b.set_entry(p, q, std::move(t));
        }
    return b;
}

namespace {

// Flat coordinates of an operator table (unit (a,b), image entry (m,c)) and
// of a bracket table ((p,q), tensor term (i,m)); both are n^4-dimensional.
long op_coord(int n, int a, int b, int m, int c) {
    return ((long(a) * n + b) * n + m) * n + c;
}
long br_coord(int n, int p, int q, int i, int m) {
    return ((long(p) * n + q) * n + i) * n + m;
}

}  // namespace

MatrixOperator rb_from_bracket(const FiniteBracket& b) {
    int n = b.dim();
    int total = n * n * n * n;
    // column u of the correspondence matrix = bracket table of the u-th
    // elementary operator
    Matrix corr(total, total);
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb)
            for (int m = 0; m < n; ++m)
                for (int c = 0; c < n; ++c) {
                    MatrixOperator e(n);
                    e.set_unit(a, bb, Matrix::unit(n, m, c));
                    FiniteBracket eb = bracket_from_rb(e);
                    long col = op_coord(n, a, bb, m, c);
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q)
                            for (const auto& [key, coeff] : eb.entry(p, q).terms())
                                corr.at(int(br_coord(n, p, q, key.first, key.second)), int(col)) = coeff;
                }
    Matrix rhs(total, 1);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (const auto& [key, coeff] : b.entry(p, q).terms())
                rhs.at(int(br_coord(n, p, q, key.first, key.second)), 0) = coeff;
    auto x = solve_linear(corr, rhs);
    if (!x) throw std::logic_error("bracket/operator correspondence is not solvable");
    MatrixOperator r(n);
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) {
            Matrix img(n, n);
            for (int m = 0; m < n; ++m)
                for (int c = 0; c < n; ++c) img.at(m, c) = x->at(int(op_coord(n, a, bb, m, c)), 0);
            r.set_unit(a, bb, std::move(img));
        }
    return r;
}

BracketReport2 check_anticom(const FiniteBracket& b, const Rational& lambda) {
    int dim = b.dim();
    BracketReport2 rep;
    for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) {
            Tensor2 d = b.entry(p, q) + b.entry(q, p).swap12();
            if (p != q) {
                d.add_term(p, q, -lambda);
                d.add_term(q, p, lambda);
            }
            if (!d.is_zero()) {
                rep.passed = false;
                rep.witnesses.push_back({p + 1, q + 1, std::move(d)});
            }
        }
    return rep;
}

Tensor3 jacobi_defect(const FiniteBracket& br, const Rational& lambda, int a, int b, int c) {
    int dim = br.dim();
    Tensor3 d(dim);
    // [[a, [[b,c]]]]_L
    for (const auto& [v, cv] : br.entry(b, c).terms())
        for (const auto& [xy, cu] : br.entry(a, v.first).terms())
            d.add_term(xy.first, xy.second, v.second, cv * cu);
    // - [[b, [[a,c]]]]_R^(12) = - sum u1 (x) [[b,u2]]
    for (const auto& [u, cu] : br.entry(a, c).terms())
        for (const auto& [xy, cb] : br.entry(b, u.second).terms())
            d.add_term(u.first, xy.first, xy.second, -cu * cb);
    // - [[[[a,b]], c]]_L = - swap23([[w1,c]] (x) w2)
    for (const auto& [w, cw] : br.entry(a, b).terms())
        for (const auto& [xy, cc] : br.entry(w.first, c).terms())
            d.add_term(xy.first, w.second, xy.second, -cw * cc);
    // + lambda (b (x) [[a,c]])^(12)
    if (!lambda.is_zero())
        for (const auto& [u, cu] : br.entry(a, c).terms())
            d.add_term(u.first, b, u.second, lambda * cu);
    return d;
}

BracketReport3 check_jacobi(const FiniteBracket& b, const Rational& lambda, int jobs) {
    int dim = b.dim();
    long total = long(dim) * dim * dim;
    auto witnesses = parallel_sweep<TripleWitness3>(
        total, jobs, [&](long idx, std::vector<TripleWitness3>& out) {
            int c = int(idx % dim), bb = int((idx / dim) % dim), a = int(idx / (long(dim) * dim));
            Tensor3 d = jacobi_defect(b, lambda, a, bb, c);
            if (!d.is_zero()) out.push_back({a + 1, bb + 1, c + 1, std::move(d)});
        });
    BracketReport3 rep;
    rep.passed = witnesses.empty();
    rep.witnesses = std::move(witnesses);
    return rep;
}

namespace {

// pi (x) pi applied to a Tensor2, expressed in quotient coordinates (the
// non-pivot coordinates of u's echelon form).
Tensor2 project_tensor(const FiniteBracket& b, const Subspace& u, const Tensor2& t) {
    int dim = b.dim();
    std::vector<int> quot_index(dim, -1);
    int qdim = 0;
    {
        std::vector<bool> is_pivot(dim, false);
        for (int p : u.pivots()) is_pivot[p] = true;
        for (int j = 0; j < dim; ++j)
            if (!is_pivot[j]) quot_index[j] = qdim++;
    }
    if (qdim == 0) return Tensor2(1);  // quotient is zero
    // cache of reduced basis vectors
    std::vector<std::vector<Rational>> red(dim);
    auto reduced = [&](int j) -> const std::vector<Rational>& {
        if (red[j].empty()) {
            std::vector<Rational> e(dim);
            e[j] = 1;
            red[j] = u.reduce(std::move(e));
        }
        return red[j];
    };
    Tensor2 out(qdim);
    for (const auto& [key, c] : t.terms()) {
        const auto& vp = reduced(key.first);
        const auto& vq = reduced(key.second);
        for (int i = 0; i < dim; ++i) {
            if (vp[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (vq[j].is_zero()) continue;
                out.add_term(quot_index[i], quot_index[j], c * vp[i] * vq[j]);
            }
        }
    }
    return out;
}

}  // namespace

IdealReport is_ideal(const FiniteBracket& b, const Subspace& u) {
    int dim = b.dim();
    if (u.ambient() != dim) throw std::invalid_argument("subspace ambient dimension mismatch");
    std::vector<Rational> basis_vec(dim);
    for (int ui = 0; ui < u.dim(); ++ui) {
        const auto& uv = u.basis()[ui];
        for (int v = 0; v < dim; ++v) {
            std::fill(basis_vec.begin(), basis_vec.end(), Rational(0));
            basis_vec[v] = 1;
            Tensor2 uv_bracket = b.eval(uv, basis_vec);
            Tensor2 img = project_tensor(b, u, uv_bracket);
            if (!img.is_zero()) return {false, IdealWitness{ui + 1, v + 1, true, std::move(img)}};
            Tensor2 vu_bracket = b.eval(basis_vec, uv);
            img = project_tensor(b, u, vu_bracket);
            if (!img.is_zero()) return {false, IdealWitness{ui + 1, v + 1, false, std::move(img)}};
        }
    }
    return {true, std::nullopt};
}

Subspace proper_ideal_from_rb(const MatrixOperator& r, const Rational& lambda) {
    int n = r.n();
    if (n < 2) throw std::invalid_argument("proper ideal construction needs dim V > 1");
    SpectralSplit s = split_spectral(r, lambda);
    Subspace u(n);
    for (const Matrix& x : s.i2prime)
        for (int q = 0; q < n; ++q) {
            std::vector<Rational> col(n);
            for (int p = 0; p < n; ++p) col[p] = x.at(p, q);
            u.insert(std::move(col));
        }
    if (u.dim() == 0 || u.dim() == n)
        throw std::logic_error("I2' V is not a proper nonzero subspace");
    auto rep = is_ideal(bracket_from_rb(r), u);
    if (!rep.is_ideal) throw std::logic_error("I2' V failed the ideal test");
    return u;
}

}  // namespace dlie
