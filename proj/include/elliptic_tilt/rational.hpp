#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace elliptic_tilt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", a plain integer, or a finite decimal such as "-0.125".
/// The result is always canonical (reduced, positive denominator).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// Throws std::invalid_argument naming `what` unless value > 0.
void require_positive(const Rational& value, std::string_view what);

Rational abs_value(const Rational& value);

}  // namespace elliptic_tilt
