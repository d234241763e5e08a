#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <string_view>

namespace degen {

/// Arbitrary-precision rational in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Valuation of the zero element.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Parses "p", "-p" or "p/q" (decimal digits only). Throws Error{parse} on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_invertible(const Rational& q) { return sgn(q) != 0; }
Rational inverse(const Rational& q);

}  // namespace degen
