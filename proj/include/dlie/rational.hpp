#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace dlie {

// Exact rational scalar. Always reduced, denominator positive; no rounding
// anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Serialization: "p/q", or just "p" when the denominator is 1. The sign is
// carried by the numerator.
std::string rational_str(const Rational& r);

// Parses "p" or "p/q" (q > 0). Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace dlie
