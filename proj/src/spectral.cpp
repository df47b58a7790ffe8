#include <secular/determinant.hpp>
#include <secular/error.hpp>
#include <secular/spectral.hpp>

#include <cmath>

namespace secular {

const char* to_string(ArithPath path) { return path == ArithPath::kExact ? "exact" : "floating"; }

PathRequest parse_path_request(std::string_view text) {
  if (text == "auto") return PathRequest::kAuto;
  if (text == "exact") return PathRequest::kExact;
  if (text == "float" || text == "floating") return PathRequest::kFloating;
  throw ParseError("unknown arithmetic path '" + std::string(text) + "' (expected exact, float or auto)");
}

UPoly characteristic_polynomial(const Pencil& pencil) {
  return det_pencil(pencil.characteristic_matrix());
}

std::vector<RealRoot> char_roots(const Pencil& pencil, const Rat& width) {
  const UPoly f = characteristic_polynomial(pencil);
  if (f.is_zero()) throw SingularPencilError();
  auto roots = sturm_isolate(f, width);
  if (pencil.is_symmetric() && is_positive_definite(pencil.lead()) &&
      total_multiplicity(roots) != static_cast<int>(pencil.size()))
    throw InternalError("symmetric pencil with definite lead matrix has non-real roots");
  return roots;
}

namespace {

void require_exact(const RealRoot& root, const char* what) {
  if (!root.exact)
    throw PathUnavailableError(std::string(what) + ": root is irrational; use the floating path");
}

QVector sign_normalized(QVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

std::optional<QVector> first_nonnull_column(const QMatrix& adj) {
  for (std::size_t j = 0; j < adj.cols(); ++j) {
    QVector col = adj.column(j);
    if (!is_zero(col)) return col;
  }
  return std::nullopt;
}

}  // namespace

QVector adjugate_eigenvector(const Pencil& pencil, const RealRoot& root) {
  require_exact(root, "adjugate_eigenvector");
  auto col = first_nonnull_column(adjugate(pencil.at(root.value)));
  if (!col)
    throw PreconditionError("adjugate vanishes at the root (geometric multiplicity > 1); "
                            "use nullspace_at_root");
  return sign_normalized(std::move(*col));
}

QVector adjugate_eigenvector_scaled(const Pencil& pencil, const RealRoot& root) {
  require_exact(root, "adjugate_eigenvector_scaled");
  auto col = first_nonnull_column(adjugate(pencil.at(root.value)));
  if (!col) throw PreconditionError("adjugate vanishes at the root");
  const UPoly deflated = exact_div(characteristic_polynomial(pencil), UPoly::linear_root(root.value));
  const Rat q = deflated(root.value);
  if (q == 0) throw PreconditionError("scaled eigenvector needs a simple root");
  for (auto& x : *col) x /= q;
  return *col;
}

std::vector<QVector> nullspace_at_root(const Pencil& pencil, const RealRoot& root) {
  require_exact(root, "nullspace_at_root");
  return nullspace(pencil.at(root.value));
}

namespace {

// Gram-Schmidt in the inner product <u, v> = u^T L v (L positive definite).
std::vector<Eigen::VectorXd> orthonormalize(std::vector<Eigen::VectorXd> vs, const Eigen::MatrixXd& L) {
  std::vector<Eigen::VectorXd> out;
  for (auto& v : vs) {
    for (const auto& u : out) v -= (u.dot(L * v)) * u;
    double norm = std::sqrt(v.dot(L * v));
    if (norm > 0) out.push_back(v / norm);
  }
  return out;
}

}  // namespace

std::vector<Eigen::VectorXd> nullspace_at_root_numeric(const Pencil& pencil, const RealRoot& root) {
  const RealRoot fine = refine_root(root, default_root_width());
  const Eigen::MatrixXd m = pencil.at(fine.midpoint()).to_eigen();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, pencil.lead().to_eigen().norm());
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) <= kFloatingNullTolerance * scale) basis.push_back(svd.matrixV().col(k));
  const QMatrix& lead = pencil.lead();
  auto out = is_positive_definite(lead) ? orthonormalize(std::move(basis), lead.to_eigen())
                                        : orthonormalize(std::move(basis), Eigen::MatrixXd::Identity(m.rows(), m.cols()));
  // same sign convention as the exact path: first clear entry positive
  for (auto& v : out) {
    const double big = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (std::abs(v(i)) <= 1e-12 * big) continue;
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return out;
}

SpectralDecomp decompose(const Pencil& pencil, PathRequest request) {
  SpectralDecomp dec;
  const QMatrix& lead = pencil.lead();
  const bool lead_definite = is_positive_definite(lead);
  const bool orthogonalize = pencil.is_symmetric() && lead_definite;
  bool all_floating = true;
  const auto roots = char_roots(pencil);
  if (request == PathRequest::kExact)
    for (const auto& root : roots) require_exact(root, "decompose");
  for (const auto& root : roots) {
    RootVectors rv;
    rv.root = root;
    if (root.exact && request != PathRequest::kFloating) {
      all_floating = false;
      rv.path = ArithPath::kExact;
      std::vector<QVector> vs;
      if (root.multiplicity == 1)
        vs.push_back(adjugate_eigenvector(pencil, root));
      else
        vs = nullspace_at_root(pencil, root);
      if (orthogonalize) {
        std::vector<QVector> ortho;
        for (auto v : vs) {
          for (const auto& u : ortho) {
            Rat coeff = bilinear(u, lead, v) / bilinear(u, lead, u);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coeff * u[i];
          }
          ortho.push_back(std::move(v));
        }
        vs = std::move(ortho);
      }
      for (const auto& v : vs) rv.squared_norms.push_back(bilinear(v, lead, v));
      rv.exact = std::move(vs);
    } else {
      rv.path = ArithPath::kFloating;
      rv.numeric = nullspace_at_root_numeric(pencil, root);
    }
    dec.roots.push_back(std::move(rv));
  }
  dec.orthonormal = all_floating && lead_definite && !dec.roots.empty();
  return dec;
}

OrthogonalityReport cauchy_orthogonality(const SpectralDecomp& dec, const QMatrix& B) {
  OrthogonalityReport report;
  const Eigen::MatrixXd Bd = B.to_eigen();
  const double bnorm = std::max(1.0, Bd.norm());
  for (std::size_t a = 0; a < dec.roots.size(); ++a) {
    for (std::size_t b = a + 1; b < dec.roots.size(); ++b) {
      const auto& ra = dec.roots[a];
      const auto& rb = dec.roots[b];
      if (ra.path == ArithPath::kExact && rb.path == ArithPath::kExact) {
        for (const auto& u : ra.exact)
          for (const auto& v : rb.exact) {
            Rat x = abs(bilinear(u, B, v));
            if (x > report.max_exact_violation) report.max_exact_violation = x;
            report.max_violation = std::max(report.max_violation, x.get_d());
            ++report.pairs_checked;
          }
        continue;
      }
      report.path = ArithPath::kFloating;
      auto as_numeric = [](const RootVectors& rv) {
        std::vector<Eigen::VectorXd> out = rv.numeric;
        for (const auto& v : rv.exact) out.push_back(to_eigen(v));
        return out;
      };
      for (const auto& u : as_numeric(ra))
        for (const auto& v : as_numeric(rb)) {
          double x = std::abs(u.dot(Bd * v)) / (u.norm() * v.norm() * bnorm);
          report.max_violation = std::max(report.max_violation, x);
          ++report.pairs_checked;
        }
    }
  }
  report.pass = report.max_exact_violation == 0 && report.max_violation <= 1e-9;
  return report;
}

QFactor q_factor(const UPoly& p, const RealRoot& root) {
  if (root.multiplicity != 1)
    throw PreconditionError("q_factor: multiple root; use the Jordan solution path");
  QFactor q;
  q.root = root;
  const UPoly dp = p.derivative();
  if (root.exact) {
    if (p(root.value) != 0) throw PreconditionError("q_factor: value is not a root of the polynomial");
    q.path = ArithPath::kExact;
    q.exact_value = exact_div(p, UPoly::linear_root(root.value))(root.value);
    if (q.exact_value == 0) throw PreconditionError("q_factor: multiple root; use the Jordan solution path");
    if (q.exact_value != dp(root.value)) throw InternalError("q_factor: deflation differs from derivative");
    q.value = q.exact_value.get_d();
    q.derivative = q.value;
    return q;
  }
  q.path = ArithPath::kFloating;
  const RealRoot fine = refine_root(root, default_root_width());
  const Rat mid = fine.midpoint();
  // synthetic division of p by (x - mid), evaluated at mid
  Rat acc(0), quotient_at(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    quotient_at = quotient_at * mid + acc;
    acc = acc * mid + *it;
  }
  q.exact_value = quotient_at;
  q.value = quotient_at.get_d();
  q.derivative = dp(mid).get_d();
  return q;
}

}  // namespace secular
