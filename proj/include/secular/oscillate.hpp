#pragma once

#include <secular/matrix.hpp>
#include <secular/real_roots.hpp>
#include <secular/spectral.hpp>

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace secular {

// Second-order systems are stored as A y'' + B y = 0. The frequency equation
// is det(K A - B) = 0 with K = omega^2, so the model pencil is K*A - B.
// Lagrange's rho^2 is -K.

enum class ModelKind { kLoadedString, kDalembertTwoMass, kYvonVillarceau2Dof, kCoupledSprings, kCustom };

const char* to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);

using Parameters = std::map<std::string, Rat>;

struct MechModel {
  ModelKind kind = ModelKind::kCustom;
  Parameters parameters;
  QMatrix A;  // kinetic (mass) matrix
  QMatrix B;  // potential (stiffness) matrix

  std::size_t size() const { return A.rows(); }
  /// K*A - B
  Pencil pencil() const { return Pencil(A, B, Orientation::kSAMinusB); }
};

/// Parameters per kind:
///   loaded-string: n (weights, integer >= 1), a (spacing)
///   dalembert-two-mass: T (time scale)
///   yvon-villarceau-2dof: g, f, a, c (A = [[g,a],[a,f]], B = c I)
///   coupled-springs: m, k, k0
MechModel build_model(ModelKind kind, const Parameters& parameters);
MechModel custom_model(QMatrix A, QMatrix B);

struct InitialConditions {
  QVector Y;  // positions at t = 0
  QVector V;  // velocities at t = 0
};

struct Mode {
  RealRoot K;          // root of the frequency equation
  double omega = 0.0;  // sqrt(K)
  Eigen::VectorXd shape;  // unit A-norm
  double amplitude = 0.0;  // E
  double phase = 0.0;      // epsilon in [0, 2 pi)
  bool rigid = false;      // K = 0: drift p + q t instead of a sine
  double drift_offset = 0.0;
  double drift_rate = 0.0;
};

struct ModalSolution {
  std::size_t dim = 0;
  std::vector<Mode> modes;

  Eigen::VectorXd position(double t) const;
  Eigen::VectorXd velocity(double t) const;
  bool has_drift() const;
};

/// Lagrange's modal solution. Requires a symmetric pencil with A positive
/// definite and every K >= 0; K < 0 raises PreconditionError.
ModalSolution solve_modal(const MechModel& model, const InitialConditions& ic);

/// sum |E_i| * max-norm(shape_i); infinite when a drift term is present.
double modal_bound(const ModalSolution& sol);

/// (1/2)(y'^T A y' + y^T B y)
double energy(const MechModel& model, const ModalSolution& sol, double t);

/// One generalized eigenspace of dx/dt = M x: the component of the solution
/// e^{sigma t} sum_k coeffs[k] t^k, with coeffs[k] = N^k x_sigma / k!.
struct JordanBlock {
  std::complex<double> sigma;
  ArithPath path = ArithPath::kExact;
  Rat sigma_exact;          // exact path only
  int multiplicity = 0;     // algebraic
  std::vector<int> chain_lengths;  // Jordan chain lengths, descending
  /// Stored once for a conjugate pair, evaluated as 2 Re(...).
  bool conjugate_pair = false;
  std::vector<QVector> exact_coeffs;
  std::vector<Eigen::VectorXcd> coeffs;

  int chain_length() const { return chain_lengths.empty() ? 0 : chain_lengths.front(); }
  /// Highest t power with a nonzero coefficient, -1 for the zero component.
  int psi_degree() const;
};

struct JordanSolution {
  std::size_t dim = 0;
  ArithPath path = ArithPath::kExact;
  std::vector<JordanBlock> blocks;
  /// Exact blocks satisfy N c_k = (k+1) c_{k+1} and N c_last = 0.
  bool exact_residual_ok = true;

  Eigen::VectorXd at(double t) const;
  Eigen::VectorXd derivative(double t) const;
};

/// Solution of dx/dt = M x with x(0) = x0 through the generalized
/// eigenstructure. Rational eigenvalues are handled exactly (unless a floating
/// path is requested); the rest in complex double arithmetic.
JordanSolution solve_jordan(const QMatrix& M, const QVector& x0, PathRequest request = PathRequest::kAuto);

/// x = (y, y'), M = [[0, I], [-A^{-1} B, 0]]
QMatrix first_order_form(const MechModel& model);

struct SpectralProjector {
  Rat sigma;
  int multiplicity = 0;
  UPoly cofactor;  // U_i with U_i Q_i = 1 mod (x - sigma_i)^mu_i
  QMatrix projector;
};

/// Projectors onto the generalized eigenspaces from the Bezout identity for
/// the monic characteristic polynomial. PathUnavailableError when some
/// eigenvalue is not rational.
std::vector<SpectralProjector> spectral_projectors(const QMatrix& M);

/// exp(M t) = sum_i e^{sigma_i t} sum_{k < mu_i} (M - sigma_i I)^k t^k / k! p_i
Eigen::MatrixXd expm_projectors(const QMatrix& M, double t);

/// p(M) by Horner's rule.
QMatrix poly_at(const UPoly& p, const QMatrix& M);

/// y(x) = sum_terms e^{alpha x} (P(x) cos(beta x) + Q(x) sin(beta x)).
struct ResidueTerm {
  std::complex<double> root;
  int multiplicity = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> cos_poly;  // coefficients of x^k, lowest first
  std::vector<double> sin_poly;
};

struct ScalarSolution {
  std::vector<ResidueTerm> terms;
  double operator()(double x) const;
  /// k-th derivative by exact differentiation of the closed form.
  double derivative(double x, int k) const;
};

/// Solves F(d/dx) y = 0 with y^(k)(0) = ic[k], k < deg F, by summing the
/// residues of Phi(r) e^{rx} / F(r).
ScalarSolution scalar_residue_solve(const UPoly& F, const std::vector<Rat>& ic);

enum class Verdict { kStable, kUnstable, kConditional };
const char* to_string(Verdict v);

struct StabilityVerdict {
  Verdict historical = Verdict::kConditional;
  std::string historical_rule;
  Verdict corrected = Verdict::kUnstable;
  std::string corrected_rule;
  bool agreement = false;
  std::vector<RealRoot> roots;  // real roots K of the frequency equation
  int nonreal_roots = 0;
};

StabilityVerdict classify_stability(const MechModel& model);

struct TimeGrid {
  double t_max = 10.0;
  int steps = 100;
  double at(int i) const { return steps == 0 ? 0.0 : t_max * i / steps; }
};

struct Trajectory {
  std::vector<double> t;
  Eigen::MatrixXd values;  // row i = state at t[i]
  double sup_norm = 0.0;   // max over the grid of the max norm
};

Trajectory sample_trajectory(const ModalSolution& sol, const TimeGrid& grid);
Trajectory sample_trajectory(const JordanSolution& sol, const TimeGrid& grid);

/// Largest relative residual of A y'' + B y on the grid, y'' from central
/// differences with step h.
double modal_residual(const MechModel& model, const ModalSolution& sol, const TimeGrid& grid,
                      double h = 1e-4);
/// Largest relative residual of dx/dt - M x, dx/dt from central differences.
double jordan_residual(const QMatrix& M, const JordanSolution& sol, const TimeGrid& grid, double h = 1e-4);

namespace reference {
Trajectory sample_trajectory(const ModalSolution& sol, const TimeGrid& grid);
Trajectory sample_trajectory(const JordanSolution& sol, const TimeGrid& grid);
}  // namespace reference

}  // namespace secular
