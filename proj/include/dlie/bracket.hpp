#pragma once

#include <optional>
#include <vector>

#include "dlie/operators.hpp"
#include "dlie/subspace.hpp"
#include "dlie/tensor.hpp"

namespace dlie {

// Double bracket on an dim-dimensional space V: the table of values
// [[f_p, f_q]] in V (x) V, extended bilinearly.
class FiniteBracket {
public:
    explicit FiniteBracket(int dim);

    int dim() const { return dim_; }
    const Tensor2& entry(int p, int q) const { return table_[std::size_t(p) * dim_ + q]; }
    void set_entry(int p, int q, Tensor2 t);

    // Bilinear extension to coordinate vectors.
    Tensor2 eval(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

    friend bool operator==(const FiniteBracket& a, const FiniteBracket& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    int dim_;
    std::vector<Tensor2> table_;
};

// [[f_p, f_q]] = sum_i f_i (x) R(e_pi) f_q  (dual convention e_ij* = e_ji).
FiniteBracket bracket_from_rb(const MatrixOperator& r);

// Inverse of the correspondence above, recovered by a linear solve on the
// full bracket-table/operator-table system.
MatrixOperator rb_from_bracket(const FiniteBracket& b);

struct PairWitness2 {
    int p, q;  // 1-based basis indices
    Tensor2 defect;
};
struct BracketReport2 {
    bool passed = true;
    std::vector<PairWitness2> witnesses;
};

struct TripleWitness3 {
    int a, b, c;  // 1-based basis indices
    Tensor3 defect;
};
struct BracketReport3 {
    bool passed = true;
    std::vector<TripleWitness3> witnesses;
};

// [[a,b]] + [[b,a]]^(12) = lambda (a (x) b - b (x) a) on all basis pairs.
BracketReport2 check_anticom(const FiniteBracket& b, const Rational& lambda);

// Weighted double Jacobi identity on all basis triples (a,b,c):
//   [[a,[[b,c]]]]_L - [[b,[[a,c]]]]_R^(12) - [[[[a,b]],c]]_L
//     + lambda (b (x) [[a,c]])^(12)  =  0,
// with [[a,u]]_L = [[a,u1]] (x) u2, [[a,u]]_R = (u1 (x) [[a,u2]])^(12) and
// [[u,c]]_L = ([[u1,c]] (x) u2)^(23). The middle term collapses to
// sum u1 (x) [[b,u2]] once both (12) swaps are composed.
BracketReport3 check_jacobi(const FiniteBracket& b, const Rational& lambda, int jobs = 1);

// Exact Jacobi defect of a single basis triple (0-based indices).
Tensor3 jacobi_defect(const FiniteBracket& b, const Rational& lambda, int a, int bb, int c);

// Ideal test through the quotient map pi: V -> V/U. U is an ideal iff
// (pi (x) pi) [[u,v]] = (pi (x) pi) [[v,u]] = 0 for all u in U, v in V.
struct IdealWitness {
    int u_index;      // 1-based index into U's echelon basis
    int v_index;      // 1-based basis index of V
    bool u_first;     // true for [[u,v]], false for [[v,u]]
    Tensor2 residual; // nonzero image under pi (x) pi, in quotient coordinates
};
struct IdealReport {
    bool is_ideal = true;
    std::optional<IdealWitness> witness;
};
IdealReport is_ideal(const FiniteBracket& b, const Subspace& u);

// U = I2' V for I2' = ker(R + lambda id): the guaranteed nonzero proper
// ideal of the induced bracket. Throws std::logic_error when U is zero, all
// of V, or fails the ideal test (none of which can happen for a
// lambda-skew Rota-Baxter operator of weight lambda != 0, dim V > 1).
Subspace proper_ideal_from_rb(const MatrixOperator& r, const Rational& lambda);

}  // namespace dlie
