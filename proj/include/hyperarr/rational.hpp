#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperarr {

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p", "+p" or "p/q" exactly. Throws Error(MalformedRational).
Rational parse_rational(std::string_view text);

/// Reduced form, "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace hyperarr
