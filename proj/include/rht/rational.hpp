#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "rht/errors.hpp"

namespace rht {

// Exact scalars. cpp_rational keeps gcd(|num|, den) = 1 and den >= 1 as a
// class invariant, which is exactly the canonical form we need. No floating
// point is used anywhere in the toolkit.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

// Parses "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

bool is_perfect_square(const Integer& n);

// Exact square root when r is the square of a rational, nullopt otherwise.
// The returned root is non-negative.
std::optional<Rational> rational_sqrt(const Rational& r);

inline bool is_square(const Rational& r) { return rational_sqrt(r).has_value(); }

// Exact binomial coefficient; 0 when k < 0 or k > n.
Integer binomial(long n, long k);

} // namespace rht
