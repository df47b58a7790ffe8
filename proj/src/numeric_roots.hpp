#pragma once

#include <secular/upoly.hpp>

#include <complex>
#include <vector>

namespace secular::detail {

/// Roots of a square-free polynomial: companion-matrix eigenvalues polished
/// by Newton steps. Near-real roots are snapped to the real axis and
/// conjugates are made exact mirror images.
std::vector<std::complex<double>> complex_roots(const UPoly& squarefree);

/// A root group of the characteristic polynomial: either x - sigma with
/// sigma rational, or the product of the irrational factors sharing one
/// multiplicity.
struct RootGroup {
  UPoly poly;
  int multiplicity = 0;
  bool rational = false;
  Rat sigma;  // rational groups only
};

std::vector<RootGroup> root_groups(const UPoly& p);

/// Taylor coefficients of p at x, lowest first.
std::vector<std::complex<double>> taylor_coeffs(const UPoly& p, std::complex<double> x);

}  // namespace secular::detail
