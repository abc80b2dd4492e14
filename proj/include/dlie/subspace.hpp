#pragma once

#include <vector>

#include "dlie/matrix.hpp"
#include "dlie/rational.hpp"

namespace dlie {

// Subspace of Q^d kept in reduced row echelon form (pivot entries 1, pivot
// columns cleared). Insertion order never changes the stored basis.
class Subspace {
public:
    explicit Subspace(int ambient);

    static Subspace span(int ambient, const std::vector<std::vector<Rational>>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<std::vector<Rational>>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Adds a vector to the span; returns true if the dimension grew.
    bool insert(std::vector<Rational> v);

    bool contains(const std::vector<Rational>& v) const;

    // Residual of v after clearing all pivot coordinates; zero iff v lies in
    // the subspace. The residual is supported on non-pivot coordinates, so it
    // represents v in the quotient by this subspace.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    int ambient_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

// Coordinates of an n x n matrix in the matrix-unit basis, e_ij at i*n + j.
std::vector<Rational> flatten(const Matrix& m);
Matrix unflatten(int n, const std::vector<Rational>& v);

}  // namespace dlie
