#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ale {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: gcd(|num|, den) = 1, den > 0,
// zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" with optional leading sign. Returns nullopt on junk
/// or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace ale
