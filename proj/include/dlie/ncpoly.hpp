#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlie/bracket.hpp"
#include "dlie/rational.hpp"

namespace dlie {

// A monomial of the free associative algebra: the byte at position t is the
// 0-based generator index of the t-th letter. The empty word is the unit.
using Word = std::string;

Word word_of(std::initializer_list<int> letters);
std::vector<int> word_letters(const Word& w);  // 1-based, for serialization

// Lexicographically minimal rotation (naive scan; words here are short).
Word min_rotation(const Word& w);

// Noncommutative polynomial: finitely supported Word -> coefficient.
class NCPoly {
public:
    using Terms = std::map<Word, Rational>;

    NCPoly() = default;
    static NCPoly unit() { return monomial(Word{}); }
    static NCPoly generator(int index);
    static NCPoly monomial(Word w, Rational c = Rational(1));

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(Word w, const Rational& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& c);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }

private:
    Terms t_;
};

// Element of A (x) A for the free algebra A.
class NCTensor2 {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Rational>;

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(Word w1, Word w2, const Rational& c);

    NCTensor2& operator+=(const NCTensor2& o);
    NCTensor2& operator-=(const NCTensor2& o);
    NCTensor2& operator*=(const Rational& c);
    friend NCTensor2 operator+(NCTensor2 a, const NCTensor2& b) { return a += b; }
    friend NCTensor2 operator-(NCTensor2 a, const NCTensor2& b) { return a -= b; }
    friend bool operator==(const NCTensor2& a, const NCTensor2& b) { return a.t_ == b.t_; }

    // Outer bimodule actions: (p (x) 1) t, t (1 (x) s), (1 (x) p) t, t (s (x) 1).
    NCTensor2 mul_left_first(const NCPoly& p) const;
    NCTensor2 mul_right_second(const NCPoly& p) const;
    NCTensor2 mul_left_second(const NCPoly& p) const;
    NCTensor2 mul_right_first(const NCPoly& p) const;

    // Multiplication map mu: w1 (x) w2 -> w1 w2.
    NCPoly multiply_out() const;

private:
    Terms t_;
};

// Image of a polynomial in A/[A,A]: every word replaced by the minimal
// rotation of its cyclic class.
class CyclicNF {
public:
    using Terms = std::map<Word, Rational>;
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_class(Word representative, const Rational& c);
    friend bool operator==(const CyclicNF& a, const CyclicNF& b) { return a.t_ == b.t_; }

private:
    Terms t_;
};

CyclicNF cyclic_reduce(const NCPoly& p);

// Unique bi-Leibniz extension of a finite double bracket to monomials:
//   [[x_1..x_k, y_1..y_l]] = sum_{i,j} (y_<j (x) x_<i) [[x_i,y_j]] (x_>i (x) y_>j),
// extended bilinearly. Letters must lie below b.dim().
NCTensor2 extend_bracket(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb);

// {a,b} = mu o [[a,b]].
NCPoly curly(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb);

// Residuals of the two Leibniz identities
//   [[a,bc]] - (b (x) 1)[[a,c]] - [[a,b]](1 (x) c)
//   [[ab,c]] - (1 (x) a)[[b,c]] - [[a,c]](b (x) 1)
struct LeibnizResiduals {
    NCTensor2 first;
    NCTensor2 second;
};
LeibnizResiduals check_leibniz(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb,
                               const NCPoly& c);

// L(a,b,c) = {a,{b,c}} - {b,{a,c}} - {{a,b},c}, as an exact polynomial.
NCPoly check_a3(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb, const NCPoly& c);

// cyclic_reduce({a,b} + {b,a}).
CyclicNF check_a4(const FiniteBracket& b, const NCPoly& a, const NCPoly& bb);

// Exhaustive modified-double-Poisson suite over all monomials up to the
// given per-argument degree caps, plus `recursion_samples` seeded random
// checks of the recursion L(a,b,c1 c2) = c1 L(a,b,c2) + L(a,b,c1) c2.
struct MdpWitness {
    std::string axiom;  // "a1", "a2", "a3", "a4", "recursion"
    std::vector<Word> args;
};
struct MdpReport {
    bool passed = true;
    std::vector<MdpWitness> witnesses;
    long leibniz_checked = 0;
    long a3_checked = 0;
    long a4_checked = 0;
    long recursion_checked = 0;
};
MdpReport check_mdp_suite(const FiniteBracket& b, int leibniz_deg, int a3_deg, int a4_deg,
                          int recursion_samples, std::uint64_t seed, int jobs = 1);

// All words over `dim` letters with length <= max_deg (including the unit),
// in length-then-lex order.
std::vector<Word> words_up_to(int dim, int max_deg);

}  // namespace dlie
