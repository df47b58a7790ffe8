#include <secular/determinant.hpp>
#include <secular/error.hpp>
#include <secular/invariants.hpp>
#include <secular/weierstrass.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace secular {

const char* to_string(Definiteness d) { return d == Definiteness::kPositive ? "positive" : "negative"; }

QuadPair QuadPair::make(QMatrix phi, QMatrix psi) {
  if (!phi.is_square() || !psi.is_square() || phi.rows() != psi.rows())
    throw PreconditionError("quadratic pair: Phi and Psi must be square and of equal size");
  if (phi.rows() == 0) throw PreconditionError("quadratic pair: empty matrices");
  if (!phi.is_symmetric()) throw PreconditionError("quadratic pair: Phi is not symmetric");
  if (!psi.is_symmetric()) throw PreconditionError("quadratic pair: Psi is not symmetric");
  const auto minors = leading_principal_minors(phi);
  if (minors.back() == 0) throw PreconditionError("quadratic pair: det(Phi) = 0");

  bool positive = true, negative = true;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int s = sgn(minors[k]);
    if (s <= 0) positive = false;
    // (-1)^(k+1) D_(k+1) > 0 for a negative definite form
    if (s == 0 || (k % 2 == 0 ? s > 0 : s < 0)) negative = false;
  }
  if (!positive && !negative) throw PreconditionError("quadratic pair: Phi is not definite");

  QuadPair pair;
  pair.Phi = std::move(phi);
  pair.Psi = std::move(psi);
  pair.Phi.mark_symmetric();
  pair.Psi.mark_symmetric();
  pair.definiteness = positive ? Definiteness::kPositive : Definiteness::kNegative;
  return pair;
}

Pencil QuadPair::pencil() const { return Pencil(Phi, Psi, Orientation::kSAMinusB); }

ArithPath ThetaDecomp::path() const {
  for (const auto& c : components)
    if (c.path == ArithPath::kFloating) return ArithPath::kFloating;
  return ArithPath::kExact;
}

namespace {

int order_of(const UPoly& divisor, UPoly p) {
  int k = 0;
  while (!p.is_zero()) {
    auto [q, r] = divrem(p, divisor);
    if (!r.is_zero()) break;
    p = std::move(q);
    ++k;
  }
  return k;
}

// Roots of det(s Phi - Psi) for a positive definite Phi. The pencil is
// symmetric with a definite lead, so char_roots also checks reality.
std::vector<RealRoot> pair_roots(const QuadPair& pair) {
  return char_roots(pair.pencil());
}

QuadPair as_positive(const QuadPair& pair) {
  if (pair.definiteness == Definiteness::kPositive) return pair;
  QuadPair flipped;
  flipped.Phi = -pair.Phi;
  flipped.Psi = -pair.Psi;
  flipped.definiteness = Definiteness::kPositive;
  return flipped;
}

// k-th Taylor coefficient of p at x.
Rat taylor_coeff(const UPoly& p, const Rat& x, int k) { return p.taylor_shift(x).coeff(k); }

}  // namespace

CircumstanceReport remarkable_circumstance_check(const QuadPair& pair) {
  const QuadPair pos = as_positive(pair);
  const PMatrix c = pos.pencil().characteristic_matrix();
  const PMatrix adj = adjugate_pencil(c);
  CircumstanceReport report;
  for (const auto& root : pair_roots(pos)) {
    CircumstanceEntry e;
    e.root = root;
    e.multiplicity = root.multiplicity;
    e.divisor = root.exact ? UPoly::linear_root(root.value) : root.defining.monic();
    e.min_order = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < adj.rows(); ++i)
      for (std::size_t j = 0; j < adj.cols(); ++j)
        if (!adj(i, j).is_zero()) e.min_order = std::min(e.min_order, order_of(e.divisor, adj(i, j)));
    if (e.min_order == std::numeric_limits<int>::max()) e.min_order = 0;
    e.divisible = e.min_order >= e.multiplicity - 1;
    report.pass = report.pass && e.divisible;
    report.roots.push_back(std::move(e));
  }
  return report;
}

ThetaDecomp theta_components(const QuadPair& pair, PathRequest request) {
  const QuadPair pos = as_positive(pair);
  const std::size_t n = pos.size();
  const PMatrix c = pos.pencil().characteristic_matrix();
  const PMatrix adj = adjugate_pencil(c);
  const UPoly f = det_pencil(c);
  const auto roots = pair_roots(pos);

  if (request == PathRequest::kExact)
    for (const auto& r : roots)
      if (!r.exact) throw PathUnavailableError("theta_components: irrational root; use the floating path");

  const Eigen::MatrixXd phi_d = pos.Phi.to_eigen();
  ThetaDecomp dec;
  dec.definiteness = pair.definiteness;
  for (const auto& root : roots) {
    ThetaComponent comp;
    comp.root = root;
    comp.multiplicity = root.multiplicity;
    const int lambda = root.multiplicity;
    const bool exact = root.exact && request != PathRequest::kFloating;

    if (exact) {
      comp.path = ArithPath::kExact;
      const Rat& s = root.value;
      const UPoly lin = UPoly::linear_root(s);
      const UPoly d = pow(lin, static_cast<unsigned>(lambda - 1));
      const Rat h = exact_div(f, d * lin)(s);
      QMatrix r(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (!divides(d, adj(i, j)))
            throw InternalError("theta_components: adjugate entry not divisible to order multiplicity - 1");
          r(i, j) = exact_div(adj(i, j), d)(s) / h;
        }
      comp.residue = r;
      comp.theta = pos.Phi * r * pos.Phi;
      if (pair.definiteness == Definiteness::kNegative) comp.theta = -comp.theta;
      comp.residue_numeric = comp.residue.to_eigen();
      comp.theta_numeric = comp.theta.to_eigen();
      comp.root_value = to_double(s);
    } else {
      comp.path = ArithPath::kFloating;
      const Rat m = refine_root(root, default_root_width()).midpoint();
      const Rat h = taylor_coeff(f, m, lambda);
      Eigen::MatrixXd r(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = to_double(taylor_coeff(adj(i, j), m, lambda - 1) / h);
      comp.residue_numeric = r;
      comp.theta_numeric = phi_d * r * phi_d;
      if (pair.definiteness == Definiteness::kNegative) comp.theta_numeric = -comp.theta_numeric;
      comp.root_value = to_double(m);
    }
    dec.components.push_back(std::move(comp));
  }
  return dec;
}

namespace {

std::size_t numeric_rank(const Eigen::MatrixXd& m, double tolerance) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double threshold = tolerance * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > threshold) ++r;
  return r;
}

bool numeric_psd(const Eigen::MatrixXd& m, double tolerance) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  return es.eigenvalues().minCoeff() >= -tolerance * scale;
}

}  // namespace

TheoremReport verify_theorem(const ThetaDecomp& dec, const QuadPair& pair, double tolerance) {
  TheoremReport report;
  const std::size_t n = pair.size();
  report.path = dec.path();
  const double sign = dec.definiteness == Definiteness::kPositive ? 1.0 : -1.0;

  int total = 0;
  for (const auto& c : dec.components) total += c.multiplicity;
  report.multiplicities_ok = total == static_cast<int>(n);

  if (report.path == ArithPath::kExact) {
    QMatrix phi_sum(n, n), psi_sum(n, n);
    for (const auto& c : dec.components) {
      phi_sum += c.theta;
      psi_sum += c.root.value * c.theta;
      if (rank(c.theta) != static_cast<std::size_t>(c.multiplicity)) report.ranks_ok = false;
      QMatrix adjusted = sign > 0 ? c.theta : -c.theta;
      if (!adjusted.is_symmetric() || inertia(adjusted).negatives != 0) report.semidefinite_ok = false;
    }
    report.exact_phi_residual = (phi_sum - pair.Phi).max_abs();
    report.exact_psi_residual = (psi_sum - pair.Psi).max_abs();
    report.phi_residual = to_double(report.exact_phi_residual);
    report.psi_residual = to_double(report.exact_psi_residual);
    report.pass = report.exact_phi_residual == 0 && report.exact_psi_residual == 0 && report.ranks_ok &&
                  report.semidefinite_ok && report.multiplicities_ok;
    return report;
  }

  Eigen::MatrixXd phi_sum = Eigen::MatrixXd::Zero(n, n), psi_sum = Eigen::MatrixXd::Zero(n, n);
  for (const auto& c : dec.components) {
    phi_sum += c.theta_numeric;
    psi_sum += c.root_value * c.theta_numeric;
    if (numeric_rank(c.theta_numeric, tolerance) != static_cast<std::size_t>(c.multiplicity)) report.ranks_ok = false;
    if (!numeric_psd(sign * c.theta_numeric, tolerance)) report.semidefinite_ok = false;
  }
  report.phi_residual = (phi_sum - pair.Phi.to_eigen()).cwiseAbs().maxCoeff();
  report.psi_residual = (psi_sum - pair.Psi.to_eigen()).cwiseAbs().maxCoeff();
  report.pass = report.phi_residual <= tolerance && report.psi_residual <= tolerance &&
                report.ranks_ok && report.semidefinite_ok && report.multiplicities_ok;
  return report;
}

}  // namespace secular
