#pragma once

#include <secular/upoly.hpp>

#include <vector>

namespace secular {

inline constexpr int kDefaultFactorDegreeCap = 12;

/// Complete factorization over Q by Kronecker's evaluation/interpolation
/// method. Factors are monic irreducibles; the product of factor^exponent is
/// monic(p). Degrees above `degree_cap` are refused (PreconditionError).
std::vector<PolyPower> kronecker_factor(const UPoly& p,
                                        int degree_cap = kDefaultFactorDegreeCap);

/// True when Kronecker's search finds no divisor of degree 1..deg/2.
bool is_irreducible(const UPoly& p);

/// Rational roots of p (distinct, ascending) by the integer-lead test.
std::vector<Rat> rational_roots(const UPoly& p);

}  // namespace secular
