#include <doctest.h>

#include <random>

#include "dlie/aybe.hpp"
#include "dlie/bracket.hpp"
#include "dlie/catalog.hpp"

using namespace dlie;

namespace {

// the three-dimensional weight -1 bracket table realized by catalog ex3
FiniteBracket arthamonov() {
    FiniteBracket b(3);
    b.set_entry(0, 1, Tensor2::basis(3, 0, 1, Rational(-1)));
    b.set_entry(1, 0, Tensor2::basis(3, 0, 1));
    b.set_entry(1, 2, Tensor2::basis(3, 2, 1));
    Tensor2 t31(3);
    t31.add_term(0, 2, Rational(1));
    t31.add_term(2, 0, Rational(-1));
    b.set_entry(2, 0, std::move(t31));
    b.set_entry(2, 1, Tensor2::basis(3, 2, 1, Rational(-1)));
    return b;
}

FiniteBracket random_bracket(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<int> d(-2, 2);
    FiniteBracket b(dim);
    for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) {
            Tensor2 t(dim);
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) t.add_term(k, l, d(rng));
            b.set_entry(p, q, std::move(t));
        }
    return b;
}

Subspace coordinate_span(int dim, std::initializer_list<int> indices) {
    Subspace s(dim);
    for (int i : indices) {
        std::vector<Rational> v(dim);
        v[i] = 1;
        s.insert(std::move(v));
    }
    return s;
}

// weight-0 skew Rota-Baxter operator x -> e_11 x e_12 - e_12 x e_11
MatrixOperator skew_weight0() {
    ATensor2 r(2);
    r.add_term(0, 0, 0, 1, Rational(1));
    r.add_term(0, 1, 0, 0, Rational(-1));
    return rb_from_tensor(r);
}

// skew but not Rota-Baxter: x -> e_12 x - x e_12
MatrixOperator ad_e12() {
    MatrixOperator r(2);
    Matrix e = Matrix::unit(2, 0, 1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Matrix x = Matrix::unit(2, i, j);
            r.set_unit(i, j, e * x - x * e);
        }
    return r;
}

}  // namespace

TEST_CASE("bracket of ex1 is the triangular pattern") {
    FiniteBracket b = bracket_from_rb(catalog("ex1", 3));
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            Tensor2 expect(3);
            if (k < l) {
                expect.add_term(k, l, Rational(1));
                expect.add_term(l, k, Rational(-1));
            }
            CHECK(b.entry(k, l) == expect);
        }
}

TEST_CASE("bracket of ex3 reproduces its table") {
    CHECK(bracket_from_rb(catalog("ex3", 3)) == arthamonov());
}

TEST_CASE("bracket of ex4 is the constant-degree shift pattern") {
    FiniteBracket b = bracket_from_rb(catalog("ex4", 3));
    Tensor2 e13(3);
    e13.add_term(0, 2, Rational(1));
    e13.add_term(1, 1, Rational(1));
    CHECK(b.entry(0, 2) == e13);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            Tensor2 expect(3);
            for (int v = std::min(k, l); v < std::max(k, l); ++v)
                expect.add_term(v, k + l - v, Rational(l >= k ? 1 : -1));
            CHECK(b.entry(k, l) == expect);
        }
}

TEST_CASE("zero operator gives the zero bracket") {
    FiniteBracket b = bracket_from_rb(MatrixOperator(2));
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) CHECK(b.entry(p, q).is_zero());
}

TEST_CASE("rb_from_bracket inverts bracket_from_rb") {
    MatrixOperator r = rb_from_bracket(arthamonov());
    CHECK(r.on_unit(0, 0) == -Matrix::unit(3, 1, 1));
    CHECK(r.on_unit(1, 0) == Matrix::unit(3, 1, 0));
    CHECK(r.on_unit(2, 2) == -(Matrix::unit(3, 0, 0) + Matrix::unit(3, 1, 1)));
    CHECK(r == catalog("ex3", 3));

    CHECK(rb_from_bracket(FiniteBracket(2)) == MatrixOperator(2));

    MatrixOperator ex4 = catalog("ex4", 3);
    CHECK(rb_from_bracket(bracket_from_rb(ex4)) == ex4);

    std::mt19937_64 rng(321);
    FiniteBracket b = random_bracket(rng, 3);
    CHECK(bracket_from_rb(rb_from_bracket(b)) == b);
}

TEST_CASE("weighted anti-commutativity") {
    CHECK(check_anticom(bracket_from_rb(catalog("ex1", 3)), Rational(1)).passed);
    CHECK(check_anticom(FiniteBracket(2), Rational(0)).passed);

    BracketReport2 rep = check_anticom(FiniteBracket(2), Rational(1));
    CHECK_FALSE(rep.passed);
    REQUIRE(!rep.witnesses.empty());
    CHECK(rep.witnesses[0].p == 1);
    CHECK(rep.witnesses[0].q == 2);
    Tensor2 expect(2);
    expect.add_term(0, 1, Rational(-1));
    expect.add_term(1, 0, Rational(1));
    CHECK(rep.witnesses[0].defect == expect);
}

TEST_CASE("anti-commutativity defect transforms under the switch") {
    std::mt19937_64 rng(5150);
    FiniteBracket b = random_bracket(rng, 3);
    Rational lam(2, 3);
    auto defect = [&](int p, int q) {
        Tensor2 d = b.entry(p, q) + b.entry(q, p).swap12();
        if (p != q) {
            d.add_term(p, q, -lam);
            d.add_term(q, p, lam);
        }
        return d;
    };
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) CHECK(defect(q, p) == defect(p, q).swap12());
}

TEST_CASE("weighted Jacobi identity") {
    CHECK(check_jacobi(arthamonov(), Rational(-1)).passed);
    CHECK(check_jacobi(FiniteBracket(3), Rational(5)).passed);
    CHECK(check_jacobi(bracket_from_rb(catalog("ex4", 3)), Rational(1)).passed);
    CHECK_FALSE(check_jacobi(arthamonov(), Rational(1)).passed);
}

TEST_CASE("the double-swap reading of the middle Jacobi term equals the collapsed one") {
    std::mt19937_64 rng(616);
    FiniteBracket b = random_bracket(rng, 3);
    for (int a = 0; a < 3; ++a)
        for (int bb = 0; bb < 3; ++bb)
            for (int c = 0; c < 3; ++c) {
                // collapsed: sum u1 (x) [[b, u2]]
                Tensor3 collapsed(3);
                for (const auto& [u, cu] : b.entry(a, c).terms())
                    for (const auto& [xy, cb] : b.entry(bb, u.second).terms())
                        collapsed.add_term(u.first, xy.first, xy.second, cu * cb);
                // literal: [[b, u]]_R places the bracket around slots 1 and 3
                // via a switch, and the superscript applies a second switch
                Tensor3 r_term(3);
                for (const auto& [u, cu] : b.entry(a, c).terms())
                    for (const auto& [xy, cb] : b.entry(bb, u.second).terms()) {
                        Tensor3 plain(3);  // u1 (x) [[b,u2]]_1 (x) [[b,u2]]_2
                        plain.add_term(u.first, xy.first, xy.second, cu * cb);
                        r_term += plain.swap12();
                    }
                CHECK(collapsed == r_term.swap12());
            }
}

TEST_CASE("bracket axioms and operator conditions agree on the catalog") {
    struct Case { const char* name; int n; int lam; };
    for (auto [name, n, lam] : {Case{"ex1", 2, 1}, Case{"ex1", 3, 1}, Case{"ex2", 3, 1},
                                Case{"ex3", 3, -1}, Case{"ex4", 2, 1}, Case{"ex4", 3, 1}}) {
        MatrixOperator r = catalog(name, n);
        Rational lambda(lam);
        bool op_side = is_rb(r, lambda).passed && is_lambda_skew(r, lambda).passed;
        FiniteBracket b = bracket_from_rb(r);
        bool br_side = check_anticom(b, lambda).passed && check_jacobi(b, lambda).passed;
        CHECK(op_side);
        CHECK(br_side);
    }

    // perturb ex1: both sides must fail together
    MatrixOperator r = catalog("ex1", 2);
    r.set_unit(0, 0, r.on_unit(0, 0) + Matrix::unit(2, 0, 0));
    Rational one(1);
    CHECK_FALSE(is_rb(r, one).passed && is_lambda_skew(r, one).passed);
    FiniteBracket b = bracket_from_rb(r);
    CHECK_FALSE(check_anticom(b, one).passed && check_jacobi(b, one).passed);
}

TEST_CASE("weight zero: skew Rota-Baxter operators give double Lie brackets") {
    MatrixOperator r = skew_weight0();
    CHECK(is_rb(r, Rational(0)).passed);
    CHECK(theta(r, Rational(0)) == MatrixOperator(2));
    FiniteBracket b = bracket_from_rb(r);
    CHECK(check_anticom(b, Rational(0)).passed);
    CHECK(check_jacobi(b, Rational(0)).passed);

    // skew but not Rota-Baxter: anti-commutativity holds, Jacobi fails
    MatrixOperator bad = ad_e12();
    CHECK(theta(bad, Rational(0)) == MatrixOperator(2));
    CHECK_FALSE(is_rb(bad, Rational(0)).passed);
    FiniteBracket bb = bracket_from_rb(bad);
    CHECK(check_anticom(bb, Rational(0)).passed);
    CHECK_FALSE(check_jacobi(bb, Rational(0)).passed);
}

TEST_CASE("ideal membership through the quotient") {
    FiniteBracket b1 = bracket_from_rb(catalog("ex1", 2));
    CHECK(is_ideal(b1, coordinate_span(2, {0})).is_ideal);
    CHECK(is_ideal(b1, coordinate_span(2, {0, 1})).is_ideal);  // U = V

    FiniteBracket b4 = bracket_from_rb(catalog("ex4", 3));
    IdealReport rep = is_ideal(b4, coordinate_span(3, {0}));
    CHECK_FALSE(rep.is_ideal);
    REQUIRE(rep.witness);
    CHECK(rep.witness->u_index == 1);
    CHECK(rep.witness->v_index == 3);
    CHECK(rep.witness->u_first);
    // [[f_1, f_3]] contains f_2 (x) f_2, which survives the quotient by f_1
    CHECK(rep.witness->residual.coeff(0, 0) == 1);
}

TEST_CASE("the kernel ideal construction") {
    Subspace u1 = proper_ideal_from_rb(catalog("ex1", 2), Rational(1));
    CHECK(u1.dim() == 1);
    CHECK(u1.contains({Rational(1), Rational(0)}));

    Subspace u3 = proper_ideal_from_rb(catalog("ex3", 3), Rational(-1));
    CHECK(u3.dim() == 2);
    CHECK(u3.contains({Rational(0), Rational(1), Rational(0)}));
    CHECK(u3.contains({Rational(0), Rational(0), Rational(1)}));
    CHECK(!u3.contains({Rational(1), Rational(0), Rational(0)}));

    CHECK(proper_ideal_from_rb(catalog("ex4", 2), Rational(1)).dim() == 1);
}
