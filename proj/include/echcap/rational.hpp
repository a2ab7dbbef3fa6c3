#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace echcap {

// Expression templates off: plain value semantics compose better with
// std::max / std::sort and friends.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Exact rational scalar; keeps gcd(|num|, den) = 1 and den >= 1 after every
// operation, which is exactly the canonical form we need.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Parses "p/q" or "p" (optionally signed). Throws ParseError on bad input
// or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

}  // namespace echcap
