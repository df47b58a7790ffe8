#pragma once

#include <secular/matrix.hpp>
#include <secular/real_roots.hpp>
#include <secular/spectral.hpp>

#include <Eigen/Dense>

#include <vector>

namespace secular {

enum class Definiteness { kPositive, kNegative };

const char* to_string(Definiteness d);

/// A symmetric pair of quadratic forms with Phi definite.
struct QuadPair {
  QMatrix Phi;
  QMatrix Psi;
  Definiteness definiteness = Definiteness::kPositive;

  /// Validates symmetry, det(Phi) != 0 and definiteness of Phi from its
  /// leading principal minors. PreconditionError otherwise.
  static QuadPair make(QMatrix phi, QMatrix psi);

  std::size_t size() const { return Phi.rows(); }
  /// s*Phi - Psi
  Pencil pencil() const;
};

/// Per-root evidence that every adjugate entry of s*Phi - Psi vanishes to
/// order multiplicity - 1. For an irrational root the divisor is the
/// square-free factor holding it.
struct CircumstanceEntry {
  RealRoot root;
  int multiplicity = 0;
  UPoly divisor;        // s - s_mu, or the square-free factor of f
  int min_order = 0;    // least order of `divisor` over nonzero adjugate entries
  bool divisible = false;
};

struct CircumstanceReport {
  bool pass = true;
  std::vector<CircumstanceEntry> roots;
};

struct ThetaComponent {
  RealRoot root;
  int multiplicity = 0;
  ArithPath path = ArithPath::kExact;
  QMatrix residue;  // exact path: G(s_mu) / h(s_mu)
  QMatrix theta;    // exact path: Phi R Phi
  Eigen::MatrixXd residue_numeric;
  Eigen::MatrixXd theta_numeric;  // always filled
  double root_value = 0.0;
};

struct ThetaDecomp {
  std::vector<ThetaComponent> components;
  Definiteness definiteness = Definiteness::kPositive;
  /// Exact when every component is exact.
  ArithPath path() const;
};

struct TheoremReport {
  bool pass = false;
  ArithPath path = ArithPath::kExact;
  Rat exact_phi_residual;
  Rat exact_psi_residual;
  double phi_residual = 0.0;
  double psi_residual = 0.0;
  bool ranks_ok = true;
  bool semidefinite_ok = true;
  bool multiplicities_ok = true;
};

/// Floating residual tolerance, max norm.
inline constexpr double kTheoremTolerance = 1e-9;

CircumstanceReport remarkable_circumstance_check(const QuadPair& pair);

/// Phi = sum theta_mu, Psi = sum s_mu theta_mu via residues of adj/det.
/// kExact raises PathUnavailableError when a root is irrational.
ThetaDecomp theta_components(const QuadPair& pair, PathRequest request = PathRequest::kAuto);

/// Exact components are compared exactly; floating ones in max norm.
TheoremReport verify_theorem(const ThetaDecomp& dec, const QuadPair& pair,
                             double tolerance = kTheoremTolerance);

}  // namespace secular
