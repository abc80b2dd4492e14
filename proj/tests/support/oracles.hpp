// Test-only oracles, independent of the library code paths they check.
#pragma once

#include <map>
#include <set>
#include <utility>

#include "dlie/ncpoly.hpp"
#include "dlie/polyfamily.hpp"
#include "dlie/subspace.hpp"
#include "dlie/tensor.hpp"

namespace dlie::testing {

// Bidegree polynomials in the commuting pair (t (x) 1, 1 (x) t): exponent
// pairs with rational coefficients, no truncation.
using BiPoly = std::map<std::pair<int, int>, Rational>;

inline void bp_add(BiPoly& p, int a, int b, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.try_emplace({a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

// (t (x) 1 - 1 (x) t) * p
inline BiPoly multiply_back(const Tensor2& t) {
    BiPoly out;
    for (const auto& [k, c] : t.terms()) {
        bp_add(out, k.first + 1, k.second, c);
        bp_add(out, k.first, k.second + 1, -c);
    }
    return out;
}

// Divided-difference numerators of the polynomial families (M2 carries the
// orientation that satisfies the weight-1 axioms; see notes in polyfamily.hpp).
inline BiPoly family_numerator(PolyFamily f, int i, int j) {
    BiPoly out;
    if (i == j) return out;
    switch (f) {
        case PolyFamily::M1:
            bp_add(out, j, i + 1, Rational(1));
            bp_add(out, i, j + 1, Rational(-1));
            break;
        case PolyFamily::M2:
            bp_add(out, i + 1, j, Rational(1));
            bp_add(out, j + 1, i, Rational(-1));
            break;
        case PolyFamily::L2:
            bp_add(out, i, j, Rational(1));
            bp_add(out, j, i, Rational(-1));
            break;
    }
    return out;
}

// Span of all commutators uv - vu of nonempty words with |u| + |v| = degree,
// as a subspace of the degree-homogeneous component. Used to cross-check
// cyclic reduction against plain linear algebra.
struct CommutatorSpan {
    std::vector<Word> words;           // all words of this degree, sorted
    std::map<Word, int> index;
    Subspace span;

    CommutatorSpan(int dim, int degree) : span(1) {
        for (const Word& w : words_up_to(dim, degree))
            if (int(w.size()) == degree) words.push_back(w);
        for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = int(i);
        span = Subspace(int(words.size()));
        for (int la = 1; la < degree; ++la)
            for (const Word& u : words_up_to(dim, la))
                for (const Word& v : words_up_to(dim, degree - la)) {
                    if (int(u.size()) != la || int(v.size()) != degree - la) continue;
                    std::vector<Rational> vec(words.size());
                    vec[index.at(u + v)] += 1;
                    vec[index.at(v + u)] -= 1;
                    span.insert(std::move(vec));
                }
    }

    std::vector<Rational> coords(const NCPoly& p) const {
        std::vector<Rational> vec(words.size());
        for (const auto& [w, c] : p.terms()) vec[index.at(w)] = c;
        return vec;
    }

    bool contains(const NCPoly& p) const { return span.contains(coords(p)); }

    int necklace_count() const {
        std::set<Word> reps;
        for (const Word& w : words) reps.insert(min_rotation(w));
        return int(reps.size());
    }
};

}  // namespace dlie::testing
