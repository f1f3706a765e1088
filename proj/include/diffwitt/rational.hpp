#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace diffwitt {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a raw numerator/denominator
/// pair must go through make_rational.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text: "a/b" in lowest terms, "/1" omitted.
std::string to_string(const Rational& q);

Rational factorial(std::uint32_t k);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace diffwitt
