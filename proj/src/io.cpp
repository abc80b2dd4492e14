#include "dlie/io.hpp"

#include <fstream>

namespace dlie {

using nlohmann::json;

namespace {

int get_int(const json& j, const std::string& field, int lo, int hi) {
    if (!j.is_number_integer()) throw IoError(field, "expected an integer");
    long v = j.get<long>();
    if (v < lo || v > hi) throw IoError(field, "value out of range");
    return int(v);
}

Rational get_rational(const json& j, const std::string& field) {
    if (!j.is_string()) throw IoError(field, "expected a rational as a string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw IoError(field, e.what());
    }
}

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw IoError(where + "." + key, "missing field");
    return j.at(key);
}

}  // namespace

MatrixOperator operator_from_json(const json& j) {
    int n = get_int(require(j, "n", "operator"), "operator.n", 1, 64);
    MatrixOperator r(n);
    const json& entries = require(j, "entries", "operator");
    if (!entries.is_array()) throw IoError("operator.entries", "expected an array");
    for (const auto& e : entries) {
        const json& from = require(e, "from", "operator.entries[]");
        if (!from.is_array() || from.size() != 2) throw IoError("operator.entries[].from", "expected [i,j]");
        int i = get_int(from[0], "operator.entries[].from[0]", 1, n) - 1;
        int jj = get_int(from[1], "operator.entries[].from[1]", 1, n) - 1;
        const json& to = require(e, "to", "operator.entries[]");
        if (!to.is_array()) throw IoError("operator.entries[].to", "expected an array");
        Matrix img(n, n);
        for (const auto& t : to) {
            if (!t.is_array() || t.size() != 3) throw IoError("operator.entries[].to[]", "expected [coeff,k,l]");
            Rational c = get_rational(t[0], "operator.entries[].to[].coeff");
            int k = get_int(t[1], "operator.entries[].to[].k", 1, n) - 1;
            int l = get_int(t[2], "operator.entries[].to[].l", 1, n) - 1;
            img.at(k, l) += c;
        }
        r.set_unit(i, jj, std::move(img));
    }
    return r;
}

json matrix_to_json(const Matrix& m) {
    json terms = json::array();
    for (int k = 0; k < m.rows(); ++k)
        for (int l = 0; l < m.cols(); ++l)
            if (!m.at(k, l).is_zero())
                terms.push_back(json::array({rational_str(m.at(k, l)), k + 1, l + 1}));
    return terms;
}

json operator_to_json(const MatrixOperator& r) {
    int n = r.n();
    json entries = json::array();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Matrix& img = r.on_unit(i, j);
            if (img.is_zero()) continue;
            entries.push_back({{"from", json::array({i + 1, j + 1})}, {"to", matrix_to_json(img)}});
        }
    return {{"n", n}, {"entries", entries}};
}

json tensor2_to_json(const Tensor2& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back(json::array({rational_str(c), k.first + 1, k.second + 1}));
    return terms;
}

BracketFile bracket_from_json(const json& j) {
    int dim = get_int(require(j, "dim", "bracket"), "bracket.dim", 1, 64);
    Rational lambda = get_rational(require(j, "lambda", "bracket"), "bracket.lambda");
    FiniteBracket b(dim);
    const json& table = require(j, "table", "bracket");
    if (!table.is_array()) throw IoError("bracket.table", "expected an array");
    for (const auto& e : table) {
        const json& args = require(e, "args", "bracket.table[]");
        if (!args.is_array() || args.size() != 2) throw IoError("bracket.table[].args", "expected [p,q]");
        int p = get_int(args[0], "bracket.table[].args[0]", 1, dim) - 1;
        int q = get_int(args[1], "bracket.table[].args[1]", 1, dim) - 1;
        const json& value = require(e, "value", "bracket.table[]");
        if (!value.is_array()) throw IoError("bracket.table[].value", "expected an array");
        Tensor2 t(dim);
        for (const auto& term : value) {
            if (!term.is_array() || term.size() != 3)
                throw IoError("bracket.table[].value[]", "expected [coeff,k,l]");
            Rational c = get_rational(term[0], "bracket.table[].value[].coeff");
            int k = get_int(term[1], "bracket.table[].value[].k", 1, dim) - 1;
            int l = get_int(term[2], "bracket.table[].value[].l", 1, dim) - 1;
            t.add_term(k, l, c);
        }
        b.set_entry(p, q, std::move(t));
    }
    return {std::move(b), std::move(lambda)};
}

json bracket_to_json(const FiniteBracket& b, const Rational& lambda) {
    json table = json::array();
    for (int p = 0; p < b.dim(); ++p)
        for (int q = 0; q < b.dim(); ++q) {
            const Tensor2& t = b.entry(p, q);
            if (t.is_zero()) continue;
            table.push_back({{"args", json::array({p + 1, q + 1})}, {"value", tensor2_to_json(t)}});
        }
    return {{"dim", b.dim()}, {"lambda", rational_str(lambda)}, {"table", table}};
}

ATensor2 tensor_from_json(const json& j) {
    int n = get_int(require(j, "n", "tensor"), "tensor.n", 1, 64);
    ATensor2 r(n);
    const json& terms = require(j, "terms", "tensor");
    if (!terms.is_array()) throw IoError("tensor.terms", "expected an array");
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 5) throw IoError("tensor.terms[]", "expected [coeff,i,j,k,l]");
        Rational c = get_rational(t[0], "tensor.terms[].coeff");
        int i = get_int(t[1], "tensor.terms[].i", 1, n) - 1;
        int jj = get_int(t[2], "tensor.terms[].j", 1, n) - 1;
        int k = get_int(t[3], "tensor.terms[].k", 1, n) - 1;
        int l = get_int(t[4], "tensor.terms[].l", 1, n) - 1;
        r.add_term(i, jj, k, l, c);
    }
    return r;
}

json tensor_to_json(const ATensor2& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back(json::array({rational_str(c), k[0] + 1, k[1] + 1, k[2] + 1, k[3] + 1}));
    return {{"n", t.n()}, {"terms", terms}};
}

NCPoly ncpoly_from_json(const json& j) {
    NCPoly p;
    const json& terms = require(j, "terms", "ncpoly");
    if (!terms.is_array()) throw IoError("ncpoly.terms", "expected an array");
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2) throw IoError("ncpoly.terms[]", "expected [coeff,[letters]]");
        Rational c = get_rational(t[0], "ncpoly.terms[].coeff");
        if (!t[1].is_array()) throw IoError("ncpoly.terms[].word", "expected a letter list");
        Word w;
        for (const auto& letter : t[1]) w.push_back(char(get_int(letter, "ncpoly.terms[].word[]", 1, 64) - 1));
        p.add_term(std::move(w), c);
    }
    return p;
}

json ncpoly_to_json(const NCPoly& p) {
    json terms = json::array();
    for (const auto& [w, c] : p.terms())
        terms.push_back(json::array({rational_str(c), json(word_letters(w))}));
    return {{"terms", terms}};
}

json nctensor_to_json(const NCTensor2& t) {
    json terms = json::array();
    for (const auto& [k, c] : t.terms())
        terms.push_back(json::array(
            {rational_str(c), json(word_letters(k.first)), json(word_letters(k.second))}));
    return {{"terms", terms}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError(path, std::string("JSON parse error: ") + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot open file for writing");
    out << canonical_dump(j);
}

}  // namespace dlie
