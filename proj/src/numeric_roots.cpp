#include "numeric_roots.hpp"

#include <secular/error.hpp>
#include <secular/factor.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace secular::detail {

std::vector<std::complex<double>> complex_roots(const UPoly& squarefree) {
  using C = std::complex<double>;
  const int d = squarefree.degree();
  if (d < 1) return {};
  const UPoly monic = squarefree.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -to_double(monic.coeff(i));
  Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
  std::vector<C> roots(es.eigenvalues().data(), es.eigenvalues().data() + d);

  const UPoly dp = monic.derivative();
  for (auto& r : roots) {
    for (int it = 0; it < 50; ++it) {
      const C fx = monic.eval(r);
      const C dfx = dp.eval(r);
      if (dfx == C(0.0)) break;
      const C step = fx / dfx;
      r -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(r))) break;
    }
    if (std::abs(r.imag()) <= 1e-12 * std::max(1.0, std::abs(r))) r = C(r.real(), 0.0);
  }
  // Pair conjugates so both members agree to the last bit.
  std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  for (auto& r : roots) {
    if (r.imag() >= 0) continue;
    auto mate = std::min_element(roots.begin(), roots.end(), [&](const C& a, const C& b) {
      return std::abs(a - std::conj(r)) < std::abs(b - std::conj(r));
    });
    r = std::conj(*mate);
  }
  return roots;
}

std::vector<RootGroup> root_groups(const UPoly& p) {
  std::vector<RootGroup> groups;
  for (const auto& [g, mu] : squarefree_decompose(p)) {
    UPoly rest = g.monic();
    for (const Rat& r : rational_roots(g)) {
      RootGroup lin;
      lin.poly = UPoly::linear_root(r);
      lin.multiplicity = mu;
      lin.rational = true;
      lin.sigma = r;
      groups.push_back(std::move(lin));
      rest = exact_div(rest, UPoly::linear_root(r));
    }
    if (rest.degree() > 0) groups.push_back({rest, mu, false, Rat(0)});
  }
  return groups;
}

std::vector<std::complex<double>> taylor_coeffs(const UPoly& p, std::complex<double> x) {
  std::vector<std::complex<double>> c;
  for (const auto& a : p.coeffs()) c.emplace_back(to_double(a), 0.0);
  const int n = static_cast<int>(c.size());
  // repeated synthetic division by (t - x)
  for (int k = 0; k < n; ++k)
    for (int i = n - 2; i >= k; --i) c[static_cast<std::size_t>(i)] += x * c[static_cast<std::size_t>(i) + 1];
  return c;
}

}  // namespace secular::detail
