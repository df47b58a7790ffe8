#pragma once

#include <secular/factor.hpp>
#include <secular/matrix.hpp>
#include <secular/real_roots.hpp>

#include <vector>

namespace secular {

/// Largest size for exhaustive minor enumeration.
inline constexpr std::size_t kMaxMinorChainSize = 6;

/// Delta_1 .. Delta_n: monic gcds of all k x k minors (Delta_0 = 1 implied).
struct MinorGcdChain {
  std::vector<UPoly> deltas;
};

/// i_1 | i_2 | ... | i_n, product equal to the monic determinant.
struct InvariantFactors {
  std::vector<UPoly> factors;
};

struct ElementaryDivisors {
  std::vector<PolyPower> divisors;
};

/// Jordan's test at one multiple root group: does the root (or every root of
/// the irreducible factor) vanish on all (n-1)-minors to order mult - 1?
struct MultipleRootWitness {
  UPoly factor;  // irreducible factor of the characteristic polynomial
  int multiplicity = 0;
  int order_in_minors = 0;  // exponent of `factor` in Delta_{n-1}
  bool annihilates = false;
};

struct DiagonalizabilityReport {
  bool diagonalizable = false;
  std::vector<MultipleRootWitness> witnesses;
  ElementaryDivisors divisors;
};

enum class InertiaMethod { kMinorFormula, kCongruenceFallback };

struct InertiaReport {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  /// (Delta, Delta_1, ..., Delta_{n-1}, 1): full determinant first, then the
  /// leading principal minors of decreasing size.
  std::vector<Rat> minor_sequence;
  InertiaMethod method = InertiaMethod::kMinorFormula;
};

struct SignatureStep {
  RealRoot root;
  int jump = 0;  // change in the positive-square count crossing the root
};

/// Throws SingularPencilError when det(P) is identically zero.
MinorGcdChain minor_gcd_chain(const PMatrix& p);

InvariantFactors invariant_factors(const MinorGcdChain& chain);

ElementaryDivisors elementary_divisors(const InvariantFactors& inv,
                                       int degree_cap = kDefaultFactorDegreeCap);

/// Requires B = I (the lambda*I - A form, either orientation).
DiagonalizabilityReport is_diagonalizable(const Pencil& pencil);

/// Signature by sign permanences of the leading-minor sequence; falls back
/// to congruence diagonalization when a leading minor vanishes.
InertiaReport inertia(const QMatrix& m);
/// Only the minor formula; PreconditionError when a leading minor is zero.
InertiaReport inertia_by_minors(const QMatrix& m);
/// Only the symmetric congruence elimination.
InertiaReport inertia_by_congruence(const QMatrix& m);

/// Eigenvalues of symmetric m with the change of the positive-square count
/// of m - lambda*I across each.
std::vector<SignatureStep> darboux_signature_steps(const QMatrix& m);

namespace reference {
MinorGcdChain minor_gcd_chain(const PMatrix& p);
}

}  // namespace secular
