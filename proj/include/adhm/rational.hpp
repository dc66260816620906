#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace adhm {

// Exact arbitrary-precision rational, the coefficient field everywhere.
// Beware of expression templates: never bind an mpq_class expression to `auto`.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Canonical text "p/q" (q > 0, gcd(p,q) = 1); integers print as "p".
std::string to_string(const Rational& x);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& x);

// 1/n! for n >= 0.
Rational inverse_factorial(int n);

// (-1)^x for any integer x.
constexpr long sign_power(long x) { return (x % 2 == 0) ? 1 : -1; }

}  // namespace adhm
