#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace secular {

/// Exact rational scalar. GMP keeps it canonical: gcd(|num|, den) = 1, den > 0.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p", a plain decimal such as "-0.25" or scientific notation
/// such as "1e-30". Throws ParseError.
Rat parse_rat(std::string_view text);

/// "p/q" (or "p" when the denominator is 1).
std::string format_rat(const Rat& value);

inline double to_double(const Rat& value) { return value.get_d(); }

/// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double value);

inline int sign(const Rat& value) { return sgn(value); }

Rat pow(const Rat& base, unsigned exponent);

}  // namespace secular
