#pragma once

#include <array>
#include <map>
#include <utility>

#include "dlie/rational.hpp"

namespace dlie {

// Finitely supported element of V (x) V over the basis f_0..f_{dim-1};
// zero coefficients are never stored.
class Tensor2 {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Rational>;

    explicit Tensor2(int dim) : dim_(dim) {}

    static Tensor2 basis(int dim, int p, int q, Rational c = Rational(1));

    int dim() const { return dim_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(int p, int q) const;

    void add_term(int p, int q, const Rational& c);
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2& operator*=(const Rational& c);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(Tensor2 a, const Rational& c) { return a *= c; }
    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        return a.dim_ == b.dim_ && a.t_ == b.t_;
    }

    Tensor2 swap12() const;

private:
    int dim_;
    Terms t_;
};

// Same over V (x) V (x) V.
class Tensor3 {
public:
    using Key = std::array<int, 3>;
    using Terms = std::map<Key, Rational>;

    explicit Tensor3(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(int a, int b, int c, const Rational& coeff);
    Tensor3& operator+=(const Tensor3& o);
    Tensor3& operator-=(const Tensor3& o);
    Tensor3& operator*=(const Rational& c);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.dim_ == b.dim_ && a.t_ == b.t_;
    }

    Tensor3 swap12() const;  // (a,b,c) -> (b,a,c)
    Tensor3 swap23() const;  // (a,b,c) -> (a,c,b)

private:
    int dim_;
    Terms t_;
};

}  // namespace dlie
