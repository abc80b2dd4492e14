#include "dlie/aybe.hpp"

#include <stdexcept>

namespace dlie {

void ATensor2::add_term(int i, int j, int k, int l, const Rational& c) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || k < 0 || k >= n_ || l < 0 || l >= n_)
        throw std::out_of_range("unit index out of range");
    if (c.is_zero()) return;
    Key key{i, j, k, l};
    auto [it, fresh] = t_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ATensor2& ATensor2::operator+=(const ATensor2& o) {
    if (n_ != o.n_) throw std::invalid_argument("tensor size mismatch");
    for (const auto& [k, c] : o.t_) add_term(k[0], k[1], k[2], k[3], c);
    return *this;
}

ATensor2& ATensor2::operator-=(const ATensor2& o) {
    if (n_ != o.n_) throw std::invalid_argument("tensor size mismatch");
    for (const auto& [k, c] : o.t_) add_term(k[0], k[1], k[2], k[3], -c);
    return *this;
}

ATensor2& ATensor2::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, v] : t_) v *= c;
    return *this;
}

ATensor2 ATensor2::tau() const {
    ATensor2 out(n_);
    for (const auto& [k, c] : t_) out.add_term(k[2], k[3], k[0], k[1], c);
    return out;
}

void ATensor3::add_term(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

ATensor2 cyclic_tensor(int n) {
    ATensor2 c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.add_term(i, j, j, i, Rational(1));
    return c;
}

ATensor2 identity_tensor(int n) {
    ATensor2 c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c.add_term(i, i, j, j, Rational(1));
    return c;
}

MatrixOperator rb_from_tensor(const ATensor2& r) {
    int n = r.n();
    MatrixOperator out(n);
    // e_ij e_pq e_kl = delta_jp delta_qk e_il, so the term c.e_ij (x) e_kl
    // sends unit (j,k) to c.e_il.
    for (const auto& [key, c] : r.terms()) {
        auto [i, j, k, l] = key;
        Matrix m = out.on_unit(j, k);
        m.at(i, l) += c;
        out.set_unit(j, k, std::move(m));
    }
    return out;
}

ATensor2 tensor_from_rb(const MatrixOperator& r) {
    int n = r.n();
    int total = n * n * n * n;
    Matrix corr(total, total);
    auto tcoord = [n](int i, int j, int k, int l) { return ((long(i) * n + j) * n + k) * n + l; };
    auto ocoord = [n](int p, int q, int a, int b) { return ((long(p) * n + q) * n + a) * n + b; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    ATensor2 e(n);
                    e.add_term(i, j, k, l, Rational(1));
                    MatrixOperator p = rb_from_tensor(e);
                    long col = tcoord(i, j, k, l);
                    for (int pp = 0; pp < n; ++pp)
                        for (int qq = 0; qq < n; ++qq) {
                            const Matrix& img = p.on_unit(pp, qq);
                            for (int a = 0; a < n; ++a)
                                for (int b = 0; b < n; ++b)
                                    if (!img.at(a, b).is_zero())
                                        corr.at(int(ocoord(pp, qq, a, b)), int(col)) = img.at(a, b);
                        }
                }
    Matrix rhs(total, 1);
    for (int pp = 0; pp < n; ++pp)
        for (int qq = 0; qq < n; ++qq) {
            const Matrix& img = r.on_unit(pp, qq);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) rhs.at(int(ocoord(pp, qq, a, b)), 0) = img.at(a, b);
        }
    auto x = solve_linear(corr, rhs);
    if (!x) throw std::logic_error("tensor/operator correspondence is not solvable");
    ATensor2 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) out.add_term(i, j, k, l, x->at(int(tcoord(i, j, k, l)), 0));
    return out;
}

AybeReport check_aybe(const ATensor2& r, const Rational& w) {
    int n = r.n();
    ATensor3 defect(n);
    // products of embedded tensors, slot by slot; a_i = (k[0],k[1]),
    // b_i = (k[2],k[3]) for each term
    for (const auto& [k1, c1] : r.terms()) {
        for (const auto& [k2, c2] : r.terms()) {
            Rational c = c1 * c2;
            // r13 r12 = sum a1 a2 (x) b2 (x) b1
            if (k1[1] == k2[0]) defect.add_term({k1[0], k2[1], k2[2], k2[3], k1[2], k1[3]}, c);
            // - r12 r23 = - sum a1 (x) b1 a2 (x) b2
            if (k1[3] == k2[0]) defect.add_term({k1[0], k1[1], k1[2], k2[1], k2[2], k2[3]}, -c);
            // + r23 r13 = + sum a2 (x) a1 (x) b1 b2
            if (k1[3] == k2[2]) defect.add_term({k2[0], k2[1], k1[0], k1[1], k1[2], k2[3]}, c);
        }
    }
    // - w r13, with the identity in the middle slot
    if (!w.is_zero())
        for (const auto& [k, c] : r.terms())
            for (int m = 0; m < n; ++m) defect.add_term({k[0], k[1], m, m, k[2], k[3]}, -w * c);
    bool passed = defect.is_zero();
    return AybeReport{passed, std::move(defect)};
}

bool check_tensor_skew(const ATensor2& r, const Rational& w) {
    ATensor2 d = r + r.tau();
    if (!w.is_zero()) {
        ATensor2 corr = cyclic_tensor(r.n());
        corr -= identity_tensor(r.n());
        corr *= w;
        d += corr;
    }
    return d.is_zero();
}

}  // namespace dlie
