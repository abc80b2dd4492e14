#include "dlie/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlie {

Subspace::Subspace(int ambient) : ambient_(ambient) {
    if (ambient <= 0) throw std::invalid_argument("ambient dimension must be positive");
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<Rational>>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
    if (int(v.size()) != ambient_) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Rational f = c;
        for (int j = pivots_[r]; j < ambient_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool Subspace::insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead < 0) return false;
    Rational inv = Rational(1) / v[lead];
    for (int j = lead; j < ambient_; ++j) v[j] *= inv;
    // clear the new pivot column in existing rows
    for (auto& row : rows_) {
        if (row[lead].is_zero()) continue;
        Rational f = row[lead];
        for (int j = lead; j < ambient_; ++j) row[j] -= f * v[j];
    }
    // keep rows ordered by pivot column
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
    std::size_t idx = std::size_t(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<Rational> flatten(const Matrix& m) {
    std::vector<Rational> v;
    v.reserve(std::size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

Matrix unflatten(int n, const std::vector<Rational>& v) {
    if (int(v.size()) != n * n) throw std::invalid_argument("coordinate count mismatch");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = v[std::size_t(i) * n + j];
    return m;
}

}  // namespace dlie
