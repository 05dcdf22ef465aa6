#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace logmc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact "p/q" rendering; the denominator is always present ("3/1").
std::string to_fraction_string(const Rational& q);

/// Parses "p/q" or "p". Throws ParseError on malformed input.
Rational parse_fraction(std::string_view text);

/// Compact rendering: "3", "-1/2".
std::string to_display_string(const Rational& q);

Integer binomial(long n, long k);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace logmc
