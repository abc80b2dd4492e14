#include "dlie/catalog.hpp"

#include <stdexcept>

namespace dlie {

namespace {

MatrixOperator make_ex1(int n) {
    MatrixOperator r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j) {
                r.set_unit(i, j, -Matrix::unit(n, i, j));
            } else if (i == j) {
                Matrix m(n, n);
                for (int k = i + 1; k < n; ++k) m.at(k, k) = 1;
                r.set_unit(i, i, std::move(m));
            }
        }
    return r;
}

MatrixOperator make_ex2(int n) { return transform_transpose(make_ex1(n)); }

MatrixOperator make_ex3() {
    int n = 3;
    MatrixOperator r(n);
    r.set_unit(1, 0, Matrix::unit(n, 1, 0));
    r.set_unit(2, 0, Matrix::unit(n, 2, 0));
    r.set_unit(1, 2, Matrix::unit(n, 1, 2));
    r.set_unit(0, 0, -Matrix::unit(n, 1, 1));
    r.set_unit(2, 2, -(Matrix::unit(n, 0, 0) + Matrix::unit(n, 1, 1)));
    return r;
}

MatrixOperator make_ex4(int n) {
    // Shift sums truncate at the matrix boundary: indices outside 0..n-1
    // contribute nothing.
    MatrixOperator r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix m(n, n);
            if (i <= j) {
                for (int k = 1; i + k < n && j + k < n; ++k) m.at(i + k, j + k) = 1;
            } else {
                for (int k = 0; i - k >= 0 && j - k >= 0; ++k) m.at(i - k, j - k) = -1;
            }
            r.set_unit(i, j, std::move(m));
        }
    return r;
}

}  // namespace

MatrixOperator catalog(std::string_view name, int n) {
    if (name == "ex3") {
        if (n != 3) throw std::invalid_argument("catalog operator ex3 requires n = 3");
        return make_ex3();
    }
    if (n < 2) throw std::invalid_argument("catalog operators require n >= 2");
    if (name == "ex1") return make_ex1(n);
    if (name == "ex2") return make_ex2(n);
    if (name == "ex4") return make_ex4(n);
    throw std::invalid_argument("unknown catalog operator: '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() { return {"ex1", "ex2", "ex3", "ex4"}; }

Rational catalog_weight(std::string_view name) {
    if (name == "ex1" || name == "ex2" || name == "ex4") return Rational(1);
    if (name == "ex3") return Rational(-1);
    throw std::invalid_argument("unknown catalog operator: '" + std::string(name) + "'");
}

}  // namespace dlie
