#include "numeric_roots.hpp"

#include <secular/error.hpp>
#include <secular/oscillate.hpp>

#include <cmath>

namespace secular {
namespace {

using C = std::complex<double>;

// Coefficients of (phi / h) up to order `terms` - 1, both given as Taylor
// series at the same point.
template <class T>
std::vector<T> series_quotient(const std::vector<T>& phi, const std::vector<T>& h, int terms) {
  std::vector<T> q(static_cast<std::size_t>(terms), T(0));
  auto at = [](const std::vector<T>& v, int i) { return i < static_cast<int>(v.size()) ? v[i] : T(0); };
  for (int i = 0; i < terms; ++i) {
    T acc = at(phi, i);
    for (int j = 1; j <= i; ++j) acc -= at(h, j) * q[static_cast<std::size_t>(i - j)];
    q[static_cast<std::size_t>(i)] = acc / h[0];
  }
  return q;
}

// Residue of Phi(r) e^{rx} / F(r) at a root of multiplicity m, as the
// polynomial coefficients a_k of x^k in e^{rx} sum a_k x^k:
// a_k = q_{m-1-k} / k!.
template <class T>
std::vector<T> residue_poly(const std::vector<T>& phi_taylor, const std::vector<T>& f_taylor, int m) {
  std::vector<T> h(f_taylor.begin() + m, f_taylor.end());
  const auto q = series_quotient(phi_taylor, h, m);
  std::vector<T> a(static_cast<std::size_t>(m));
  T fact(1);
  for (int k = 0; k < m; ++k) {
    if (k > 0) fact *= k;
    a[static_cast<std::size_t>(k)] = q[static_cast<std::size_t>(m - 1 - k)] / fact;
  }
  return a;
}

std::vector<Rat> exact_taylor(const UPoly& p, const Rat& x) {
  const UPoly s = p.taylor_shift(x);
  std::vector<Rat> c;
  for (int k = 0; k <= s.degree(); ++k) c.push_back(s.coeff(k));
  return c;
}

// Derivative of e^{ax}(P cos bx + Q sin bx), same shape.
void differentiate(double a, double b, std::vector<double>& P, std::vector<double>& Q) {
  const std::size_t n = std::max(P.size(), Q.size());
  P.resize(n, 0.0);
  Q.resize(n, 0.0);
  std::vector<double> nP(n, 0.0), nQ(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    nP[k] = a * P[k] + b * Q[k];
    nQ[k] = a * Q[k] - b * P[k];
    if (k + 1 < n) {
      nP[k] += static_cast<double>(k + 1) * P[k + 1];
      nQ[k] += static_cast<double>(k + 1) * Q[k + 1];
    }
  }
  P = std::move(nP);
  Q = std::move(nQ);
}

double poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

double ScalarSolution::operator()(double x) const { return derivative(x, 0); }

double ScalarSolution::derivative(double x, int k) const {
  double y = 0.0;
  for (const auto& t : terms) {
    std::vector<double> P = t.cos_poly, Q = t.sin_poly;
    for (int i = 0; i < k; ++i) differentiate(t.alpha, t.beta, P, Q);
    y += std::exp(t.alpha * x) * (poly_eval(P, x) * std::cos(t.beta * x) + poly_eval(Q, x) * std::sin(t.beta * x));
  }
  return y;
}

ScalarSolution scalar_residue_solve(const UPoly& F, const std::vector<Rat>& ic) {
  const int d = F.degree();
  if (d < 1) throw PreconditionError("scalar_residue_solve: F must have degree >= 1");
  if (static_cast<int>(ic.size()) != d)
    throw PreconditionError("scalar_residue_solve: need " + std::to_string(d) + " initial values");

  // Laplace numerator: Phi(r) = sum_j f_j sum_{k<j} r^{j-1-k} y^(k)(0)
  UPoly phi;
  for (int j = 1; j <= d; ++j)
    for (int k = 0; k < j; ++k)
      phi += UPoly::monomial(F.coeff(j) * ic[static_cast<std::size_t>(k)], static_cast<unsigned>(j - 1 - k));

  ScalarSolution sol;
  for (const auto& g : detail::root_groups(F)) {
    const int m = g.multiplicity;
    if (g.rational) {
      const auto a = residue_poly(exact_taylor(phi, g.sigma), exact_taylor(F, g.sigma), m);
      ResidueTerm t;
      t.root = {to_double(g.sigma), 0.0};
      t.multiplicity = m;
      t.alpha = to_double(g.sigma);
      for (const auto& x : a) t.cos_poly.push_back(to_double(x));
      t.sin_poly.assign(t.cos_poly.size(), 0.0);
      sol.terms.push_back(std::move(t));
      continue;
    }
    for (const C& r : detail::complex_roots(g.poly)) {
      if (r.imag() < 0) continue;
      const auto a = residue_poly(detail::taylor_coeffs(phi, r), detail::taylor_coeffs(F, r), m);
      ResidueTerm t;
      t.root = r;
      t.multiplicity = m;
      t.alpha = r.real();
      t.beta = r.imag();
      const double w = r.imag() > 0 ? 2.0 : 1.0;
      for (const auto& x : a) {
        // w Re(e^{i b x} a_k) = w Re(a_k) cos bx - w Im(a_k) sin bx
        t.cos_poly.push_back(w * x.real());
        t.sin_poly.push_back(r.imag() > 0 ? -w * x.imag() : 0.0);
      }
      sol.terms.push_back(std::move(t));
    }
  }
  return sol;
}

}  // namespace secular
