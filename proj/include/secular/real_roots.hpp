#pragma once

#include <secular/upoly.hpp>

#include <vector>

namespace secular {

/// A real root of a rational polynomial: either an exact rational or an
/// isolating interval (lo, hi) of its square-free defining polynomial.
struct RealRoot {
  bool exact = false;
  Rat value;             // valid when exact
  Rat lo, hi;            // isolating interval when not exact
  UPoly defining;        // square-free; x - value for exact roots
  int multiplicity = 1;  // multiplicity in the original polynomial

  static RealRoot make_exact(const Rat& v, int multiplicity);

  Rat width() const { return exact ? Rat(0) : Rat(hi - lo); }
  /// Exact value, or the interval midpoint.
  Rat midpoint() const;
  double approx() const { return to_double(midpoint()); }
  /// Strict bounds: for exact roots both are the value itself.
  Rat lower() const { return exact ? value : lo; }
  Rat upper() const { return exact ? value : hi; }
};

/// Default isolation width used by callers that do not specify one.
Rat default_root_width();

/// Sturm sequence of a square-free polynomial, primitive-normalized.
std::vector<UPoly> sturm_chain(const UPoly& squarefree);

/// Number of sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<UPoly>& chain, const Rat& x);

/// Number of distinct real roots in (a, b] for a chain; a, b need not be
/// roots of the polynomial.
int count_roots(const std::vector<UPoly>& chain, const Rat& a, const Rat& b);

/// Strict bound B with |root| < B for all complex roots of p.
Rat cauchy_bound(const UPoly& p);

/// Isolates every distinct real root of p, ascending. Rational roots are
/// reported exactly; the rest get disjoint intervals narrower than
/// target_width with nonzero, opposite-sign endpoint values.
std::vector<RealRoot> sturm_isolate(const UPoly& p, const Rat& target_width);
std::vector<RealRoot> sturm_isolate(const UPoly& p);

/// Bisects an isolated root until its width is at most `width`.
RealRoot refine_root(const RealRoot& root, const Rat& width);

/// Sum of multiplicities of the real roots.
int total_multiplicity(const std::vector<RealRoot>& roots);

}  // namespace secular
