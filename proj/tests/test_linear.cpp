#include <doctest.h>

#include <random>

#include "dlie/matrix.hpp"
#include "dlie/rational.hpp"
#include "dlie/subspace.hpp"

using namespace dlie;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    int r = int(rows.size()), c = int(rows.begin()->size());
    Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, int r, int c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("rational parse and format") {
    CHECK(rational_str(parse_rational("3/4")) == "3/4");
    CHECK(rational_str(parse_rational("-6/4")) == "-3/2");
    CHECK(rational_str(parse_rational("7/1")) == "7");
    CHECK(rational_str(parse_rational("-5")) == "-5");
    CHECK(rational_str(Rational(0)) == "0");
    CHECK(parse_rational(" 2/3 ") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix::identity(2)).empty());
    CHECK(kernel(Matrix(2, 2)).size() == 2);

    auto basis = kernel(from_rows({{1, 1}, {1, 1}}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0, 0) == 1);
    CHECK(basis[0].at(1, 0) == -1);
}

TEST_CASE("solve_linear examples") {
    Matrix b(2, 1);
    b.at(0, 0) = 5;
    b.at(1, 0) = -7;
    auto x = solve_linear(Matrix::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK(!solve_linear(Matrix(2, 2), b));

    Matrix a = from_rows({{2, 0}, {0, 3}});
    Matrix rhs(2, 1);
    rhs.at(0, 0) = 1;
    rhs.at(1, 0) = 1;
    auto y = solve_linear(a, rhs);
    REQUIRE(y);
    CHECK(y->at(0, 0) == Rational(1, 2));
    CHECK(y->at(1, 0) == Rational(1, 3));
}

TEST_CASE("iterated kernel examples") {
    Matrix nil = from_rows({{0, 1}, {0, 0}});
    CHECK(iterated_kernel(nil, 2).size() == 2);
    CHECK(iterated_kernel(from_rows({{2, 1}, {1, 1}}), 3).empty());

    auto basis = iterated_kernel(from_rows({{0, 0}, {0, 1}}), 1);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].at(0, 0) == 1);
    CHECK(basis[0].at(1, 0) == 0);
}

TEST_CASE("kernel vectors are exact nullvectors and independent") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + int(rng() % 4), c = 2 + int(rng() % 4);
        Matrix m = random_matrix(rng, r, c);
        auto basis = kernel(m);
        Subspace s(c);
        for (const auto& v : basis) {
            CHECK((m * v).is_zero());
            std::vector<Rational> coords(c);
            for (int i = 0; i < c; ++i) coords[i] = v.at(i, 0);
            CHECK(s.insert(coords));  // grew => independent
        }
        // rank-nullity
        Matrix rr = m;
        CHECK(int(basis.size()) == c - int(rref(rr).size()));
    }
}

TEST_CASE("kernel chain is nondecreasing and stabilizes by the dimension") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + int(rng() % 3);
        Matrix m = random_matrix(rng, n, n, -1, 1);
        std::size_t prev = 0;
        for (int k = 1; k <= n + 1; ++k) {
            auto basis = iterated_kernel(m, unsigned(k));
            CHECK(basis.size() >= prev);
            prev = basis.size();
        }
        CHECK(iterated_kernel(m, unsigned(n)).size() ==
              iterated_kernel(m, unsigned(n + 1)).size());
    }
}

TEST_CASE("solve_linear recovers a solution of a consistent system") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + int(rng() % 3), c = 2 + int(rng() % 3);
        Matrix a = random_matrix(rng, r, c);
        Matrix x = random_matrix(rng, c, 1);
        Matrix b = a * x;
        auto y = solve_linear(a, b);
        REQUIRE(y);
        CHECK(a * *y == b);
    }
}

TEST_CASE("subspace echelon insert and membership") {
    Subspace s(3);
    CHECK(s.insert({Rational(2), Rational(0), Rational(2)}));
    CHECK(!s.insert({Rational(1), Rational(0), Rational(1)}));
    CHECK(s.insert({Rational(0), Rational(1), Rational(1)}));
    CHECK(s.dim() == 2);
    CHECK(s.contains({Rational(1), Rational(1), Rational(2)}));
    CHECK(!s.contains({Rational(0), Rational(0), Rational(1)}));
    // echelon normalization: pivots are 1 and cleared elsewhere
    CHECK(s.basis()[0][0] == 1);
    CHECK(s.basis()[1][1] == 1);
}
