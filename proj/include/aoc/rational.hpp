#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aoc {

/// Exact rational scalar used for every coordinate, split fraction and
/// λ-length coefficient. Always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Parses `-?\d+(/[1-9]\d*)?` into a canonical rational.
/// Throws ParseError carrying the byte offset of the first offending character.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" (q > 1, lowest terms) otherwise.
std::string format_rational(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
Rational power(const Rational& base, std::int64_t exponent);

// Overflow-checked 64-bit arithmetic; throws Error(Overflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace aoc
