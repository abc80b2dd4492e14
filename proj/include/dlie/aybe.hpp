#pragma once

#include <array>
#include <map>

#include "dlie/operators.hpp"
#include "dlie/rational.hpp"

namespace dlie {

// Element of M_n (x) M_n as a finitely supported sum of unit pairs
// e_ij (x) e_kl. The switch tau exchanges the two factors.
class ATensor2 {
public:
    using Key = std::array<int, 4>;  // (i,j,k,l)
    using Terms = std::map<Key, Rational>;

    explicit ATensor2(int n) : n_(n) {}

    int n() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(int i, int j, int k, int l, const Rational& c);
    ATensor2& operator+=(const ATensor2& o);
    ATensor2& operator-=(const ATensor2& o);
    ATensor2& operator*=(const Rational& c);
    friend ATensor2 operator+(ATensor2 a, const ATensor2& b) { return a += b; }
    friend ATensor2 operator-(ATensor2 a, const ATensor2& b) { return a -= b; }
    friend bool operator==(const ATensor2& a, const ATensor2& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }

    ATensor2 tau() const;

private:
    int n_;
    Terms t_;
};

// Element of M_n (x) M_n (x) M_n (used only for equation defects).
class ATensor3 {
public:
    using Key = std::array<int, 6>;
    using Terms = std::map<Key, Rational>;

    explicit ATensor3(int n) : n_(n) {}

    int n() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const Key& k, const Rational& c);

private:
    int n_;
    Terms t_;
};

// C = sum e_ij (x) e_ji.
ATensor2 cyclic_tensor(int n);
// E (x) E expanded over diagonal units.
ATensor2 identity_tensor(int n);

// P_r(x) = sum c . e_ij x e_kl.
MatrixOperator rb_from_tensor(const ATensor2& r);

// The unique tensor with rb_from_tensor(tensor) == r, recovered by a linear
// solve on the n^4-dimensional correspondence.
ATensor2 tensor_from_rb(const MatrixOperator& r);

// Weighted associative Yang-Baxter defect
//   r13 r12 - r12 r23 + r23 r13 - w r13,
// computed slot-wise with unit structure constants. Weight conventions:
// an operator passing the Rota-Baxter check at weight lambda corresponds to
// a tensor solving this equation at weight w = -lambda.
struct AybeReport {
    bool passed;
    ATensor3 defect;
};
AybeReport check_aybe(const ATensor2& r, const Rational& w);

// Tensor-side skew-symmetry at weight w:
//   r + tau(r) + w (C - E (x) E) = 0.
// With w the tensor's own AYBE weight, this matches operator-side
// lambda-skew-symmetry under lambda = -w (same sign constant as above).
bool check_tensor_skew(const ATensor2& r, const Rational& w);

}  // namespace dlie
