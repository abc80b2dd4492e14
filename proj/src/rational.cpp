#include "dlie/rational.hpp"

#include <stdexcept>

namespace dlie {

std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer(num))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt p{std::string(num)};
    if (slash == std::string_view::npos) return Rational(p);
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt q{std::string(den)};
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(p, q);
}

}  // namespace dlie
