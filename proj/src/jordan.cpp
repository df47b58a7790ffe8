#include "numeric_roots.hpp"

#include <secular/error.hpp>
#include <secular/oscillate.hpp>

#include <cmath>

namespace secular {

int JordanBlock::psi_degree() const {
  if (path == ArithPath::kExact) {
    for (int k = static_cast<int>(exact_coeffs.size()) - 1; k >= 0; --k)
      if (!is_zero(exact_coeffs[static_cast<std::size_t>(k)])) return k;
    return -1;
  }
  double largest = 0.0;
  for (const auto& c : coeffs) largest = std::max(largest, c.cwiseAbs().maxCoeff());
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[static_cast<std::size_t>(k)].cwiseAbs().maxCoeff() > 1e-9 * largest) return k;
  return -1;
}

namespace {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

std::vector<int> chain_lengths_from_kernels(const std::vector<int>& kernel_dims) {
  // kernel_dims[k] = dim ker N^k, k = 0..mu; chains of length >= k number
  // kernel_dims[k] - kernel_dims[k-1].
  std::vector<int> at_least;
  for (std::size_t k = 1; k < kernel_dims.size(); ++k) at_least.push_back(kernel_dims[k] - kernel_dims[k - 1]);
  std::vector<int> lengths;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const int longer = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    for (int c = 0; c < at_least[k] - longer; ++c) lengths.push_back(static_cast<int>(k) + 1);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

int numeric_rank(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > 1e-8 * sv(0)) ++r;
  return r;
}

template <class V>
V eval_poly_vec(const std::vector<V>& c, double t) {
  V acc = c.back();
  for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) acc = (acc * t + c[static_cast<std::size_t>(k)]).eval();
  return acc;
}

JordanBlock exact_block(const QMatrix& M, const Rat& sigma, int mu, const QVector& component, bool& ok) {
  const std::size_t n = M.rows();
  const QMatrix N = M - sigma * QMatrix::identity(n);
  JordanBlock b;
  b.sigma = {to_double(sigma), 0.0};
  b.sigma_exact = sigma;
  b.path = ArithPath::kExact;
  b.multiplicity = mu;

  std::vector<int> dims{0};
  QMatrix power = QMatrix::identity(n);
  for (int k = 1; k <= mu; ++k) {
    power = power * N;
    dims.push_back(static_cast<int>(n - rank(power)));
    if (dims.back() == mu) break;
  }
  if (dims.back() != mu) throw InternalError("solve_jordan: generalized eigenspace has the wrong dimension");
  b.chain_lengths = chain_lengths_from_kernels(dims);

  QVector c = component;
  for (int k = 0; k < b.chain_length(); ++k) {
    b.exact_coeffs.push_back(c);
    c = N * c;
    for (auto& x : c) x /= k + 1;
  }
  if (!is_zero(c)) ok = false;
  return b;
}

CMat complex_matrix(const QMatrix& M) { return M.to_eigen().cast<std::complex<double>>(); }

}  // namespace

JordanSolution solve_jordan(const QMatrix& M, const QVector& x0, PathRequest request) {
  if (!M.is_square()) throw PreconditionError("solve_jordan: matrix is not square");
  const std::size_t n = M.rows();
  if (x0.size() != n) throw PreconditionError("solve_jordan: initial vector has the wrong dimension");
  JordanSolution sol;
  sol.dim = n;
  if (n == 0) return sol;

  const UPoly f = characteristic_polynomial(Pencil::standard(M)).monic();
  const auto groups = detail::root_groups(f);
  for (const auto& g : groups)
    if (!g.rational && request == PathRequest::kExact)
      throw PathUnavailableError("solve_jordan: irrational or complex eigenvalues; use the floating path");

  // Exact split of x0 over the rational invariant subspaces ker h(M)^mu.
  std::vector<std::vector<QVector>> bases;
  std::vector<QVector> all;
  for (const auto& g : groups) {
    auto basis = nullspace(poly_at(pow(g.poly, static_cast<unsigned>(g.multiplicity)), M));
    if (static_cast<int>(basis.size()) != g.poly.degree() * g.multiplicity)
      throw InternalError("solve_jordan: invariant subspace has the wrong dimension");
    all.insert(all.end(), basis.begin(), basis.end());
    bases.push_back(std::move(basis));
  }
  const QVector coords = solve(QMatrix::from_columns(all), x0);
  std::vector<QVector> components;
  std::size_t offset = 0;
  for (const auto& basis : bases) {
    QVector comp(n, Rat(0));
    for (const auto& v : basis) {
      for (std::size_t i = 0; i < n; ++i) comp[i] += coords[offset] * v[i];
      ++offset;
    }
    components.push_back(std::move(comp));
  }

  const CMat Mc = complex_matrix(M);
  const CMat I = CMat::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& g = groups[gi];
    const int mu = g.multiplicity;
    if (g.rational && request != PathRequest::kFloating) {
      sol.blocks.push_back(exact_block(M, g.sigma, mu, components[gi], sol.exact_residual_ok));
      continue;
    }
    sol.path = ArithPath::kFloating;
    const auto sigmas = g.rational ? std::vector<std::complex<double>>{{to_double(g.sigma), 0.0}}
                                   : detail::complex_roots(g.poly);
    // Generalized eigenspace of each root: the mu smallest right singular
    // vectors of (M - sigma I)^mu; the dimension is known exactly.
    std::vector<CMat> spaces;
    for (const auto& s : sigmas) {
      CMat p = I;
      for (int k = 0; k < mu; ++k) p = p * (Mc - s * I);
      Eigen::JacobiSVD<CMat> svd(p, Eigen::ComputeFullV);
      spaces.push_back(svd.matrixV().rightCols(mu));
    }
    CMat Z(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(mu * sigmas.size()));
    for (std::size_t j = 0; j < spaces.size(); ++j) Z.middleCols(static_cast<Eigen::Index>(j) * mu, mu) = spaces[j];
    const CVec target = to_eigen(components[gi]).cast<std::complex<double>>();
    const CVec a = Z.colPivHouseholderQr().solve(target);

    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      const auto s = sigmas[j];
      if (s.imag() < 0) continue;
      JordanBlock b;
      b.sigma = s;
      b.path = ArithPath::kFloating;
      b.multiplicity = mu;
      b.conjugate_pair = s.imag() > 0;
      if (g.rational) b.sigma_exact = g.sigma;
      const CMat N = Mc - s * I;
      std::vector<int> dims{0};
      CMat power = I;
      for (int k = 1; k <= mu; ++k) {
        power = power * N;
        dims.push_back(std::min(mu, static_cast<int>(n) - numeric_rank(power)));
        if (dims.back() == mu) break;
      }
      if (dims.back() != mu) dims.back() = mu;
      b.chain_lengths = chain_lengths_from_kernels(dims);
      CVec c = spaces[j] * a.segment(static_cast<Eigen::Index>(j) * mu, mu);
      for (int k = 0; k < b.chain_length(); ++k) {
        b.coeffs.push_back(c);
        c = N * c / static_cast<double>(k + 1);
      }
      sol.blocks.push_back(std::move(b));
    }
  }
  return sol;
}

Eigen::VectorXd JordanSolution::at(double t) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& b : blocks) {
    if (b.path == ArithPath::kExact) {
      if (b.exact_coeffs.empty()) continue;
      std::vector<Eigen::VectorXd> c;
      for (const auto& v : b.exact_coeffs) c.push_back(to_eigen(v));
      x += std::exp(b.sigma.real() * t) * eval_poly_vec(c, t);
      continue;
    }
    if (b.coeffs.empty()) continue;
    const CVec v = std::exp(b.sigma * t) * eval_poly_vec(b.coeffs, t);
    x += (b.conjugate_pair ? 2.0 : 1.0) * v.real();
  }
  return x;
}

Eigen::VectorXd JordanSolution::derivative(double t) const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& b : blocks) {
    std::vector<CVec> c;
    if (b.path == ArithPath::kExact)
      for (const auto& v : b.exact_coeffs) c.push_back(to_eigen(v).cast<std::complex<double>>());
    else
      c = b.coeffs;
    if (c.empty()) continue;
    // d/dt e^{st} psi = e^{st} (s psi + psi')
    std::vector<CVec> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      CVec term = b.sigma * c[k];
      if (k + 1 < c.size()) term += static_cast<double>(k + 1) * c[k + 1];
      d.push_back(term);
    }
    const CVec v = std::exp(b.sigma * t) * eval_poly_vec(d, t);
    x += (b.conjugate_pair ? 2.0 : 1.0) * v.real();
  }
  return x;
}

}  // namespace secular
