#include "dlie/double_construction.hpp"

#include <stdexcept>

#include "dlie/parallel.hpp"

namespace dlie {

DoubleElement::DoubleElement(Matrix p, Matrix b) : plain(std::move(p)), barred(std::move(b)) {
    if (plain.rows() != plain.cols() || barred.rows() != barred.cols() ||
        plain.rows() != barred.rows())
        throw std::invalid_argument("double element components must be square of equal size");
}

DoubleElement DoubleElement::of_plain(Matrix a) {
    Matrix z(a.rows(), a.cols());
    return {std::move(a), std::move(z)};
}

DoubleElement DoubleElement::of_barred(Matrix a) {
    Matrix z(a.rows(), a.cols());
    return {std::move(z), std::move(a)};
}

DoubleElement& DoubleElement::operator+=(const DoubleElement& o) {
    plain += o.plain;
    barred += o.barred;
    return *this;
}

DoubleElement dr_product(const MatrixOperator& r, const Rational& lambda, const DoubleElement& x,
                         const DoubleElement& y) {
    const Matrix& a = x.plain;
    const Matrix& b = x.barred;
    const Matrix& u = y.plain;
    const Matrix& v = y.barred;
    Matrix av = a * v, bu = b * u, rb = r.apply(b), rv = r.apply(v);
    Matrix plain = a * u + r.apply(av) - a * rv + r.apply(bu) - rb * u;
    Matrix barred = av + bu - rb * v - b * rv - (b * v) * lambda;
    return {std::move(plain), std::move(barred)};
}

DoubleElement i_map(const MatrixOperator& r, const Rational& lambda, const Matrix& a) {
    return {a * lambda + r.apply(a), a};
}

DoubleElement j_map(const MatrixOperator& r, const Rational& lambda, const Matrix& a) {
    (void)lambda;
    return {-r.apply(a), -a};
}

namespace {

DoubleElement basis_element(int n, int index) {
    int N = n * n;
    int u = index % N;
    Matrix m = Matrix::unit(n, u / n, u % n);
    return index < N ? DoubleElement::of_plain(std::move(m))
                     : DoubleElement::of_barred(std::move(m));
}

}  // namespace

AssocReport check_assoc(const MatrixOperator& r, const Rational& lambda, int jobs) {
    int n = r.n();
    long B = 2L * n * n;
    auto witnesses = parallel_sweep<DoubleTripleWitness>(
        B * B * B, jobs, [&](long idx, std::vector<DoubleTripleWitness>& out) {
            int z = int(idx % B), y = int((idx / B) % B), x = int(idx / (B * B));
            DoubleElement ex = basis_element(n, x), ey = basis_element(n, y),
                          ez = basis_element(n, z);
            DoubleElement lhs = dr_product(r, lambda, dr_product(r, lambda, ex, ey), ez);
            DoubleElement rhs = dr_product(r, lambda, ex, dr_product(r, lambda, ey, ez));
            lhs.plain -= rhs.plain;
            lhs.barred -= rhs.barred;
            if (!lhs.plain.is_zero() || !lhs.barred.is_zero())
                out.push_back({x + 1, y + 1, z + 1, std::move(lhs)});
        });
    AssocReport rep;
    rep.passed = witnesses.empty();
    rep.witnesses = std::move(witnesses);
    return rep;
}

Rational q_form(const DoubleElement& x, const DoubleElement& y) {
    return trace_pairing(x.plain, y.barred) + trace_pairing(x.barred, y.plain);
}

QInvarianceReport check_q_invariance(const MatrixOperator& r, const Rational& lambda) {
    int n = r.n();
    long B = 2L * n * n;
    QInvarianceReport rep;
    for (long idx = 0; idx < B * B * B && rep.invariant; ++idx) {
        int z = int(idx % B), y = int((idx / B) % B), x = int(idx / (B * B));
        DoubleElement ex = basis_element(n, x), ey = basis_element(n, y), ez = basis_element(n, z);
        Rational lhs = q_form(dr_product(r, lambda, ex, ey), ez);
        Rational rhs = q_form(ex, dr_product(r, lambda, ey, ez));
        if (lhs != rhs) {
            rep.invariant = false;
            // the defect is the scalar Q(xy,z) - Q(x,yz), stored at (0,0)
            DoubleElement d = DoubleElement::zero(n);
            d.plain.at(0, 0) = lhs - rhs;
            rep.witness = DoubleTripleWitness{x + 1, y + 1, z + 1, std::move(d)};
        }
    }
    // equivalent reading: theta_R vanishes on all unit products
    MatrixOperator th = theta(r, lambda);
    bool theta_route = true;
    for (int i = 0; i < n && theta_route; ++i)
        for (int j = 0; j < n && theta_route; ++j)
            for (int k = 0; k < n && theta_route; ++k)
                for (int l = 0; l < n; ++l) {
                    Matrix prod = Matrix::unit(n, i, j) * Matrix::unit(n, k, l);
                    if (!th.apply(prod).is_zero()) {
                        theta_route = false;
                        break;
                    }
                }
    if (theta_route != rep.invariant)
        throw std::logic_error("Q-invariance sweep disagrees with the theta criterion");
    return rep;
}

}  // namespace dlie
