#include <doctest.h>

#include <random>

#include "dlie/catalog.hpp"
#include "dlie/operators.hpp"

using namespace dlie;

namespace {

MatrixOperator random_operator(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> d(-2, 2);
    MatrixOperator r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix m(n, n);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) m.at(p, q) = d(rng);
            r.set_unit(i, j, std::move(m));
        }
    return r;
}

MatrixOperator skew_part(const MatrixOperator& r) {
    MatrixOperator s = r;
    s += adjoint(r) * Rational(-1);
    s *= Rational(1, 2);
    return s;
}

}  // namespace

TEST_CASE("apply is the linear extension of the unit table") {
    MatrixOperator p = catalog("ex1", 2);
    CHECK(p.apply(Matrix::unit(2, 0, 0)) == Matrix::unit(2, 1, 1));
    CHECK(MatrixOperator(2).apply(Matrix::identity(2)).is_zero());
    Matrix x = Matrix::unit(2, 0, 0) + Matrix::unit(2, 0, 1);
    CHECK(p.apply(x) == Matrix::unit(2, 1, 1) - Matrix::unit(2, 0, 1));
}

TEST_CASE("catalog tables") {
    MatrixOperator ex1 = catalog("ex1", 2);
    CHECK(ex1.on_unit(0, 1) == -Matrix::unit(2, 0, 1));
    CHECK(ex1.on_unit(1, 0).is_zero());
    CHECK(ex1.on_unit(0, 0) == Matrix::unit(2, 1, 1));
    CHECK(ex1.on_unit(1, 1).is_zero());

    MatrixOperator ex3 = catalog("ex3", 3);
    CHECK(ex3.on_unit(1, 0) == Matrix::unit(3, 1, 0));
    CHECK(ex3.on_unit(0, 0) == -Matrix::unit(3, 1, 1));
    CHECK(ex3.on_unit(2, 2) == -(Matrix::unit(3, 0, 0) + Matrix::unit(3, 1, 1)));
    CHECK(ex3.on_unit(0, 1).is_zero());

    // diagonal-shift operator at n=2: the ascending branch is empty on e_12,
    // the descending branch gives e_21 -> -e_21
    MatrixOperator ex4 = catalog("ex4", 2);
    CHECK(ex4.on_unit(0, 0) == Matrix::unit(2, 1, 1));
    CHECK(ex4.on_unit(0, 1).is_zero());
    CHECK(ex4.on_unit(1, 0) == -Matrix::unit(2, 1, 0));
    CHECK(ex4.on_unit(1, 1).is_zero());

    CHECK_THROWS_AS(catalog("ex3", 4), std::invalid_argument);
    CHECK_THROWS_AS(catalog("nope", 2), std::invalid_argument);
    CHECK_THROWS_AS(catalog("ex1", 1), std::invalid_argument);
}

TEST_CASE("Rota-Baxter identity on the catalog") {
    for (int n = 2; n <= 4; ++n) {
        CHECK(is_rb(catalog("ex1", n), Rational(1)).passed);
        CHECK(is_rb(catalog("ex2", n), Rational(1)).passed);
        CHECK(is_rb(catalog("ex4", n), Rational(1)).passed);
    }
    CHECK(is_rb(catalog("ex3", 3), Rational(-1)).passed);
    CHECK_FALSE(is_rb(catalog("ex3", 3), Rational(1)).passed);

    CHECK(is_rb(MatrixOperator::identity(2) * Rational(-1), Rational(1)).passed);
    RBReport rep = is_rb(MatrixOperator::identity(2), Rational(1));
    CHECK_FALSE(rep.passed);
    // defect of (e_11, e_11) is xy - 3xy = -2 e_11
    CHECK(rep.witnesses[0].xi == 0);
    CHECK(rep.witnesses[0].defect == Matrix::unit(2, 0, 0) * Rational(-2));
}

TEST_CASE("trace pairing") {
    CHECK(trace_pairing(Matrix::unit(2, 0, 1), Matrix::unit(2, 1, 0)) == 1);
    CHECK(trace_pairing(Matrix::unit(2, 0, 1), Matrix::unit(2, 0, 1)) == 0);
    CHECK(trace_pairing(Matrix::identity(3), Matrix::identity(3)) == 3);
}

TEST_CASE("adjoint: defining identity, involution, frozen table") {
    MatrixOperator zero(3);
    CHECK(adjoint(zero) == zero);

    MatrixOperator a = adjoint(catalog("ex1", 2));
    CHECK(a.on_unit(0, 0).is_zero());
    CHECK(a.on_unit(0, 1).is_zero());
    CHECK(a.on_unit(1, 0) == -Matrix::unit(2, 1, 0));
    CHECK(a.on_unit(1, 1) == Matrix::unit(2, 0, 0));

    MatrixOperator ex4 = catalog("ex4", 3);
    CHECK(adjoint(adjoint(ex4)) == ex4);

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        int n = 2 + int(rng() % 2);
        MatrixOperator r = random_operator(rng, n);
        MatrixOperator rs = adjoint(r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        CHECK(trace_pairing(r.on_unit(i, j), Matrix::unit(n, k, l)) ==
                              trace_pairing(Matrix::unit(n, i, j), rs.on_unit(k, l)));
        CHECK(adjoint(rs) == r);
    }
}

TEST_CASE("theta values") {
    std::mt19937_64 rng(7);
    MatrixOperator s = skew_part(random_operator(rng, 2));
    CHECK(theta(s, Rational(0)) == MatrixOperator(2));

    MatrixOperator th = theta(catalog("ex1", 2), Rational(1));
    CHECK(th.on_unit(0, 0) == Matrix::identity(2));
    CHECK(th.on_unit(0, 1).is_zero());
}

TEST_CASE("weighted skew-symmetry") {
    for (int n = 2; n <= 4; ++n) CHECK(is_lambda_skew(catalog("ex1", n), Rational(1)).passed);
    CHECK(is_lambda_skew(catalog("ex4", 3), Rational(1)).passed);
    CHECK(is_lambda_skew(catalog("ex3", 3), Rational(-1)).passed);
    CHECK(is_lambda_skew(MatrixOperator(2), Rational(0)).passed);
    CHECK_FALSE(is_lambda_skew(MatrixOperator(2), Rational(1)).passed);
}

TEST_CASE("transforms") {
    MatrixOperator t = transform_tilde(catalog("ex1", 2), Rational(1));
    CHECK(t.on_unit(0, 0) == -(Matrix::unit(2, 0, 0) + Matrix::unit(2, 1, 1)));
    CHECK(t.on_unit(0, 1).is_zero());
    CHECK(t.on_unit(1, 0) == -Matrix::unit(2, 1, 0));
    CHECK(t.on_unit(1, 1) == -Matrix::unit(2, 1, 1));

    MatrixOperator ex1 = catalog("ex1", 3);
    CHECK(transform_conj(ex1, Matrix::identity(3)) == ex1);
    CHECK_THROWS_AS(transform_conj(ex1, Matrix(3, 3)), std::invalid_argument);

    for (int n = 2; n <= 4; ++n)
        CHECK(transform_transpose(catalog("ex1", n)) == catalog("ex2", n));
}

TEST_CASE("tilde and conjugation preserve the Rota-Baxter identity") {
    Matrix g(3, 3);
    g.at(0, 0) = 1; g.at(0, 1) = 2; g.at(1, 1) = 1; g.at(2, 0) = 3; g.at(2, 2) = 1;
    for (const char* name : {"ex1", "ex4"}) {
        MatrixOperator r = catalog(name, 3);
        CHECK(is_rb(transform_tilde(r, Rational(1)), Rational(1)).passed);
        CHECK(is_rb(transform_conj(r, g), Rational(1)).passed);
    }
    MatrixOperator e3 = catalog("ex3", 3);
    CHECK(is_rb(transform_tilde(e3, Rational(-1)), Rational(-1)).passed);
    CHECK(is_rb(transform_conj(e3, g), Rational(-1)).passed);
}

TEST_CASE("the adjoint of a skew operator is again a skew Rota-Baxter operator") {
    struct Case { const char* name; int n; int lam; };
    for (auto [name, n, lam] : {Case{"ex1", 3, 1}, Case{"ex3", 3, -1}, Case{"ex4", 3, 1}}) {
        MatrixOperator r = catalog(name, n);
        MatrixOperator alt = transform_adjoint_skew(r, Rational(lam));
        CHECK(alt == adjoint(r));
        CHECK(is_rb(alt, Rational(lam)).passed);
        CHECK(is_lambda_skew(alt, Rational(lam)).passed);
    }
}

TEST_CASE("no weighted catalog operator has vanishing theta") {
    struct Case { const char* name; int n; int lam; };
    for (auto [name, n, lam] : {Case{"ex1", 3, 1}, Case{"ex2", 3, 1}, Case{"ex3", 3, -1},
                                Case{"ex4", 4, 1}}) {
        MatrixOperator th = theta(catalog(name, n), Rational(lam));
        CHECK(th.on_unit(0, 0) == Matrix::identity(n) * Rational(lam));
        CHECK_FALSE(th.on_unit(0, 0).is_zero());
    }
}

TEST_CASE("spectral split") {
    SpectralSplit s = split_spectral(catalog("ex1", 2), Rational(1));
    CHECK(s.i1.size() == 3);
    REQUIRE(s.i2.size() == 1);
    CHECK(s.i2[0] == Matrix::unit(2, 0, 1));
    REQUIRE(s.i2prime.size() == 1);
    CHECK(s.i2prime[0] == Matrix::unit(2, 0, 1));

    SpectralSplit z = split_spectral(MatrixOperator(2), Rational(1));
    CHECK(z.i1.size() == 4);
    CHECK(z.i2.empty());

    SpectralSplit m = split_spectral(MatrixOperator::identity(2) * Rational(-1), Rational(1));
    CHECK(m.i1.empty());
    CHECK(m.i2.size() == 4);

    // spectrum {1} at weight 1: neither kernel sees anything
    CHECK_THROWS_AS(split_spectral(MatrixOperator::identity(2), Rational(1)), std::runtime_error);
    CHECK_THROWS_AS(split_spectral(catalog("ex1", 2), Rational(0)), std::invalid_argument);
}
