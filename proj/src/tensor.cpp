#include "dlie/tensor.hpp"

#include <stdexcept>

namespace dlie {

Tensor2 Tensor2::basis(int dim, int p, int q, Rational c) {
    Tensor2 t(dim);
    t.add_term(p, q, c);
    return t;
}

Rational Tensor2::coeff(int p, int q) const {
    auto it = t_.find({p, q});
    return it == t_.end() ? Rational(0) : it->second;
}

void Tensor2::add_term(int p, int q, const Rational& c) {
    if (p < 0 || p >= dim_ || q < 0 || q >= dim_) throw std::out_of_range("tensor index out of range");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace({p, q}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("tensor dimension mismatch");
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("tensor dimension mismatch");
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
}

Tensor2& Tensor2::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, v] : t_) v *= c;
    return *this;
}

Tensor2 Tensor2::swap12() const {
    Tensor2 out(dim_);
    for (const auto& [k, c] : t_) out.add_term(k.second, k.first, c);
    return out;
}

void Tensor3::add_term(int a, int b, int c, const Rational& coeff) {
    if (a < 0 || a >= dim_ || b < 0 || b >= dim_ || c < 0 || c >= dim_)
        throw std::out_of_range("tensor index out of range");
    if (coeff.is_zero()) return;
    auto [it, fresh] = t_.try_emplace({a, b, c}, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("tensor dimension mismatch");
    for (const auto& [k, c] : o.t_) add_term(k[0], k[1], k[2], c);
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("tensor dimension mismatch");
    for (const auto& [k, c] : o.t_) add_term(k[0], k[1], k[2], -c);
    return *this;
}

Tensor3& Tensor3::operator*=(const Rational& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [k, v] : t_) v *= c;
    return *this;
}

Tensor3 Tensor3::swap12() const {
    Tensor3 out(dim_);
    for (const auto& [k, c] : t_) out.add_term(k[1], k[0], k[2], c);
    return out;
}

Tensor3 Tensor3::swap23() const {
    Tensor3 out(dim_);
    for (const auto& [k, c] : t_) out.add_term(k[0], k[2], k[1], c);
    return out;
}

}  // namespace dlie
