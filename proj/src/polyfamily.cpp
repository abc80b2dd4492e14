#include "dlie/polyfamily.hpp"

namespace dlie {

PolyFamily parse_family(const std::string& name) {
    if (name == "M1") return PolyFamily::M1;
    if (name == "M2") return PolyFamily::M2;
    if (name == "L2") return PolyFamily::L2;
    throw std::invalid_argument("unknown polynomial family: '" + name + "'");
}

std::string family_name(PolyFamily f) {
    switch (f) {
        case PolyFamily::M1: return "M1";
        case PolyFamily::M2: return "M2";
        case PolyFamily::L2: return "L2";
    }
    throw std::logic_error("bad family");
}

Rational family_lambda(PolyFamily f) {
    return f == PolyFamily::L2 ? Rational(0) : Rational(1);
}

Tensor2 poly_bracket(PolyFamily f, int i, int j, int truncation) {
    int D = truncation;
    if (i < 0 || j < 0 || i > D || j > D)
        throw std::invalid_argument("exponent outside truncation window");
    Tensor2 t(D + 1);
    auto add = [&](int a, int b, int sign) {
        if (a > D || b > D)
            throw TruncationOverflow("bracket term exceeds truncation degree");
        t.add_term(a, b, Rational(sign));
    };
    if (i == j) return t;
    // geometric-sum expansions of the divided differences; all exponents
    // stay <= max(i, j)
    switch (f) {
        case PolyFamily::M1:
            if (i < j)
                for (int s = 0; s < j - i; ++s) add(i + s, j - s, 1);
            else
                for (int s = 0; s < i - j; ++s) add(j + s, i - s, -1);
            break;
        case PolyFamily::M2:
            if (i < j)
                for (int s = 0; s < j - i; ++s) add(j - s, i + s, -1);
            else
                for (int s = 0; s < i - j; ++s) add(i - s, j + s, 1);
            break;
        case PolyFamily::L2:
            if (i < j)
                for (int s = 0; s < j - i; ++s) add(j - 1 - s, i + s, -1);
            else
                for (int s = 0; s < i - j; ++s) add(i - 1 - s, j + s, 1);
            break;
    }
    return t;
}

FiniteBracket poly_bracket_table(PolyFamily f, int truncation) {
    FiniteBracket b(truncation + 1);
    for (int i = 0; i <= truncation; ++i)
        for (int j = 0; j <= truncation; ++j) b.set_entry(i, j, poly_bracket(f, i, j, truncation));
    return b;
}

PolyAxiomReport check_poly_axioms(PolyFamily f, int truncation, int jobs) {
    FiniteBracket b = poly_bracket_table(f, truncation);
    Rational lambda = family_lambda(f);
    PolyAxiomReport rep;
    rep.anticom = check_anticom(b, lambda);
    rep.jacobi = check_jacobi(b, lambda, jobs);
    rep.passed = rep.anticom.passed && rep.jacobi.passed;
    return rep;
}

IdealReport check_ideal_poly(PolyFamily f, const std::set<int>& degrees, int truncation) {
    FiniteBracket b = poly_bracket_table(f, truncation);
    Subspace u(truncation + 1);
    for (int g : degrees) {
        if (g < 0 || g > truncation) throw std::invalid_argument("generator degree outside truncation");
        std::vector<Rational> v(truncation + 1);
        v[g] = 1;
        u.insert(std::move(v));
    }
    return is_ideal(b, u);
}

BracketReport2 check_shift_iso(PolyFamily f, int truncation) {
    FiniteBracket b = poly_bracket_table(f, truncation);
    BracketReport2 rep;
    for (int i = 0; i < truncation; ++i)
        for (int j = 0; j < truncation; ++j) {
            Tensor2 shifted(truncation + 1);
            for (const auto& [k, c] : b.entry(i, j).terms())
                shifted.add_term(k.first + 1, k.second + 1, c);
            Tensor2 d = shifted - b.entry(i + 1, j + 1);
            if (!d.is_zero()) {
                rep.passed = false;
                rep.witnesses.push_back({i + 1, j + 1, std::move(d)});
            }
        }
    return rep;
}

}  // namespace dlie
