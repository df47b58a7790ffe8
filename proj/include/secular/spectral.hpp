#pragma once

#include <secular/matrix.hpp>
#include <secular/real_roots.hpp>

#include <Eigen/Dense>

#include <optional>
#include <string_view>
#include <vector>

namespace secular {

enum class ArithPath { kExact, kFloating };

const char* to_string(ArithPath path);

/// What a caller asks for; kAuto takes the exact path whenever it exists.
enum class PathRequest { kAuto, kExact, kFloating };

PathRequest parse_path_request(std::string_view text);

/// Relative singular-value threshold of the floating nullspace.
inline constexpr double kFloatingNullTolerance = 1e-10;

/// Vectors attached to one characteristic root.
struct RootVectors {
  RealRoot root;
  ArithPath path = ArithPath::kExact;
  std::vector<QVector> exact;            // exact path, lead-orthogonal, unnormalized
  std::vector<Rat> squared_norms;        // v^T L v for each exact vector
  std::vector<Eigen::VectorXd> numeric;  // floating path, unit lead-norm
};

struct SpectralDecomp {
  std::vector<RootVectors> roots;
  /// Set when every vector is stored with unit norm (floating path only).
  bool orthonormal = false;
};

/// The deflated value (P / (x - r))(r) at a simple root; the scale factor of
/// Lagrange's Q is fixed to 1.
struct QFactor {
  RealRoot root;
  ArithPath path = ArithPath::kExact;
  Rat exact_value;
  double value = 0.0;
  double derivative = 0.0;  // P'(r), equal to value
};

struct OrthogonalityReport {
  bool pass = true;
  ArithPath path = ArithPath::kExact;
  Rat max_exact_violation;
  double max_violation = 0.0;
  int pairs_checked = 0;
};

/// Characteristic polynomial det of the pencil's characteristic matrix.
UPoly characteristic_polynomial(const Pencil& pencil);

/// Real characteristic roots with multiplicity. For symmetric pencils whose
/// lead matrix is positive definite the roots must all be real; a shortfall
/// raises InternalError.
std::vector<RealRoot> char_roots(const Pencil& pencil, const Rat& width = default_root_width());

/// First non-null adjugate column of the characteristic matrix at an exact
/// root, sign-normalized so its first nonzero entry is positive.
/// PreconditionError when the adjugate vanishes there (use nullspace_at_root),
/// PathUnavailableError for irrational roots.
QVector adjugate_eigenvector(const Pencil& pencil, const RealRoot& root);

/// The raw adjugate column divided by the deflated determinant at the root:
/// the classical quotient-of-minors formula. Simple exact roots only.
QVector adjugate_eigenvector_scaled(const Pencil& pencil, const RealRoot& root);

/// Exact nullspace basis of the characteristic matrix at an exact root.
std::vector<QVector> nullspace_at_root(const Pencil& pencil, const RealRoot& root);

/// Floating nullspace at any root: refines to 1e-30, evaluates at the
/// midpoint and keeps singular directions below the relative threshold.
std::vector<Eigen::VectorXd> nullspace_at_root_numeric(const Pencil& pencil, const RealRoot& root);

/// Roots and eigenvectors of a pencil; exact where roots are rational unless
/// the floating path is requested. kExact raises PathUnavailableError on an
/// irrational root.
SpectralDecomp decompose(const Pencil& pencil, PathRequest request = PathRequest::kAuto);

/// Cross products v_i^T B v_j across distinct roots must vanish.
OrthogonalityReport cauchy_orthogonality(const SpectralDecomp& dec, const QMatrix& B);

/// Deflation at a simple root, cross-checked against P'(root).
QFactor q_factor(const UPoly& p, const RealRoot& root);

}  // namespace secular
