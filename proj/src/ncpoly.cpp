#include "dlie/ncpoly.hpp"

#include <random>
#include <stdexcept>

#include "dlie/parallel.hpp"

namespace dlie {

Word word_of(std::initializer_list<int> letters) {
    Word w;
    w.reserve(letters.size());
    for (int x : letters) w.push_back(char(x));
    return w;
}

std::vector<int> word_letters(const Word& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (char c : w) out.push_back(int(c) + 1);
    return out;
}

Word min_rotation(const Word& w) {
    if (w.size() < 2) return w;
    Word best = w;
    Word cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        cur = cur.substr(1) + cur[0];
        if (cur < best) best = cur;
    }
    return best;
}

NCPoly NCPoly::generator(int index) { return monomial(Word(1, char(index))); }

NCPoly NCPoly::monomial(Word w, Rational c) {
    NCPoly p;
    p.add_term(std::move(w), c);
    return p;
}

void NCPoly::add_term(Word w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(std::move(w), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, v] : t_) v *= c;
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly out;
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_) out.add_term(wa + wb, ca * cb);
    return out;
}

void NCTensor2::add_term(Word w1, Word w2, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(Key{std::move(w1), std::move(w2)}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

NCTensor2& NCTensor2::operator+=(const NCTensor2& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
}

NCTensor2& NCTensor2::operator-=(const NCTensor2& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
}

NCTensor2& NCTensor2::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, v] : t_) v *= c;
    return *this;
}

NCTensor2 NCTensor2::mul_left_first(const NCPoly& p) const {
    NCTensor2 out;
    for (const auto& [k, c] : t_)
        for (const auto& [w, cw] : p.terms()) out.add_term(w + k.first, k.second, c * cw);
    return out;
}

NCTensor2 NCTensor2::mul_right_second(const NCPoly& p) const {
    NCTensor2 out;
    for (const auto& [k, c] : t_)
        for (const auto& [w, cw] : p.terms()) out.add_term(k.first, k.second + w, c * cw);
    return out;
}

NCTensor2 NCTensor2::mul_left_second(const NCPoly& p) const {
    NCTensor2 out;
    for (const auto& [k, c] : t_)
        for (const auto& [w, cw] : p.terms()) out.add_term(k.first, w + k.second, c * cw);
    return out;
}

NCTensor2 NCTensor2::mul_right_first(const NCPoly& p) const {
    NCTensor2 out;
    for (const auto& [k, c] : t_)
        for (const auto& [w, cw] : p.terms()) out.add_term(k.first + w, k.second, c * cw);
    return out;
}

NCPoly NCTensor2::multiply_out() const {
    NCPoly out;
    for (const auto& [k, c] : t_) out.add_term(k.first + k.second, c);
    return out;
}

void CyclicNF::add_class(Word representative, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(std::move(representative), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

CyclicNF cyclic_reduce(const NCPoly& p) {
    CyclicNF out;
    for (const auto& [w, c] : p.terms()) out.add_class(min_rotation(w), c);
    return out;
}

NCTensor2 extend_bracket(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb) {
    int dim = b.dim();
    NCTensor2 out;
    for (const auto& [x, ca] : a.terms()) {
        for (char ch : x)
            if (int(ch) >= dim) throw std::out_of_range("generator index out of range");
        for (const auto& [y, cb] : bb.terms()) {
            for (char ch : y)
                if (int(ch) >= dim) throw std::out_of_range("generator index out of range");
            Rational cab = ca * cb;
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j)
                    for (const auto& [pq, c] : b.entry(int(x[i]), int(y[j])).terms()) {
                        Word w1 = y.substr(0, j) + char(pq.first) + x.substr(i + 1);
                        Word w2 = x.substr(0, i) + char(pq.second) + y.substr(j + 1);
                        out.add_term(std::move(w1), std::move(w2), cab * c);
                    }
        }
    }
    return out;
}

NCPoly curly(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb) {
    return extend_bracket(b, a, bb).multiply_out();
}

LeibnizResiduals check_leibniz(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb,
                               const NCPoly& c) {
    NCTensor2 r1 = extend_bracket(b, a, bb * c);
    r1 -= extend_bracket(b, a, c).mul_left_first(bb);
    r1 -= extend_bracket(b, a, bb).mul_right_second(c);

    NCTensor2 r2 = extend_bracket(b, a * bb, c);
    r2 -= extend_bracket(b, bb, c).mul_left_second(a);
    r2 -= extend_bracket(b, a, c).mul_right_first(bb);
    return {std::move(r1), std::move(r2)};
}

NCPoly check_a3(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb, const NCPoly& c) {
    NCPoly out = curly(b, a, curly(b, bb, c));
    out -= curly(b, bb, curly(b, a, c));
    out -= curly(b, curly(b, a, bb), c);
    return out;
}

CyclicNF check_a4(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb) {
    return cyclic_reduce(curly(b, a, bb) + curly(b, bb, a));
}

std::vector<Word> words_up_to(int dim, int max_deg) {
    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (int d = 1; d <= max_deg; ++d) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (int g = 0; g < dim; ++g) out.push_back(out[i] + char(g));
        level_begin = level_end;
    }
    return out;
}

MdpReport check_mdp_suite(const FiniteBracket& b, int leibniz_deg, int a3_deg, int a4_deg,
                          int recursion_samples, std::uint64_t seed, int jobs) {
    int dim = b.dim();
    MdpReport rep;

    auto leib_words = words_up_to(dim, leibniz_deg);
    long nl = long(leib_words.size());
    rep.leibniz_checked = nl * nl * nl;
    auto leib_wit = parallel_sweep<MdpWitness>(
        nl * nl * nl, jobs, [&](long idx, std::vector<MdpWitness>& out) {
            const Word& wc = leib_words[idx % nl];
            const Word& wb = leib_words[(idx / nl) % nl];
            const Word& wa = leib_words[idx / (nl * nl)];
            auto res = check_leibniz(b, NCPoly::monomial(wa), NCPoly::monomial(wb),
                                     NCPoly::monomial(wc));
            if (!res.first.is_zero()) out.push_back({"a1", {wa, wb, wc}});
            if (!res.second.is_zero()) out.push_back({"a2", {wa, wb, wc}});
        });

    auto a3_words = words_up_to(dim, a3_deg);
    long n3 = long(a3_words.size());
    rep.a3_checked = n3 * n3 * n3;
    auto a3_wit = parallel_sweep<MdpWitness>(
        n3 * n3 * n3, jobs, [&](long idx, std::vector<MdpWitness>& out) {
            const Word& wc = a3_words[idx % n3];
            const Word& wb = a3_words[(idx / n3) % n3];
            const Word& wa = a3_words[idx / (n3 * n3)];
            if (!check_a3(b, NCPoly::monomial(wa), NCPoly::monomial(wb), NCPoly::monomial(wc))
                     .is_zero())
                out.push_back({"a3", {wa, wb, wc}});
        });

    auto a4_words = words_up_to(dim, a4_deg);
    long n4 = long(a4_words.size());
    rep.a4_checked = n4 * n4;
    auto a4_wit =
        parallel_sweep<MdpWitness>(n4 * n4, jobs, [&](long idx, std::vector<MdpWitness>& out) {
            const Word& wb = a4_words[idx % n4];
            const Word& wa = a4_words[idx / n4];
            if (!check_a4(b, NCPoly::monomial(wa), NCPoly::monomial(wb)).is_zero())
                out.push_back({"a4", {wa, wb}});
        });

    std::mt19937_64 rng(seed);
    auto random_word = [&](int min_len, int max_len) {
        std::uniform_int_distribution<int> len(min_len, max_len);
        std::uniform_int_distribution<int> gen(0, dim - 1);
        Word w;
        int l = len(rng);
        for (int t = 0; t < l; ++t) w.push_back(char(gen(rng)));
        return w;
    };
    std::vector<MdpWitness> rec_wit;
    for (int s = 0; s < recursion_samples; ++s) {
        Word wa = random_word(1, 4), wb = random_word(1, 4);
        Word wc1 = random_word(1, 2), wc2 = random_word(1, 2);
        NCPoly a = NCPoly::monomial(wa), bp = NCPoly::monomial(wb);
        NCPoly c1 = NCPoly::monomial(wc1), c2 = NCPoly::monomial(wc2);
        NCPoly lhs = check_a3(b, a, bp, c1 * c2);
        NCPoly rhs = c1 * check_a3(b, a, bp, c2) + check_a3(b, a, bp, c1) * c2;
        if (!(lhs - rhs).is_zero()) rec_wit.push_back({"recursion", {wa, wb, wc1, wc2}});
        ++rep.recursion_checked;
    }

    for (auto* wit : {&leib_wit, &a3_wit, &a4_wit, &rec_wit})
        for (auto& w : *wit) rep.witnesses.push_back(std::move(w));
    rep.passed = rep.witnesses.empty();
    return rep;
}

}  // namespace dlie
