#include "numeric_roots.hpp"

#include <secular/error.hpp>
#include <secular/oscillate.hpp>

#include <cmath>

namespace secular {

QMatrix poly_at(const UPoly& p, const QMatrix& M) {
  if (!M.is_square()) throw PreconditionError("poly_at: matrix is not square");
  const std::size_t n = M.rows();
  QMatrix acc(n, n);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * M;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

std::vector<SpectralProjector> spectral_projectors(const QMatrix& M) {
  if (!M.is_square()) throw PreconditionError("spectral_projectors: matrix is not square");
  const UPoly f = characteristic_polynomial(Pencil::standard(M)).monic();
  const auto groups = detail::root_groups(f);
  std::vector<SpectralProjector> out;
  for (const auto& g : groups) {
    if (!g.rational)
      throw PathUnavailableError("expm: eigenvalues are not all rational; use solve_jordan on the floating path");
    const UPoly local = pow(g.poly, static_cast<unsigned>(g.multiplicity));
    const UPoly q = exact_div(f, local);
    SpectralProjector p;
    p.sigma = g.sigma;
    p.multiplicity = g.multiplicity;
    p.cofactor = inverse_mod(q, local);
    p.projector = poly_at(divrem(p.cofactor * q, f).remainder, M);
    out.push_back(std::move(p));
  }
  return out;
}

Eigen::MatrixXd expm_projectors(const QMatrix& M, double t) {
  const std::size_t n = M.rows();
  const auto projectors = spectral_projectors(M);
  Eigen::MatrixXd result = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& p : projectors) {
    const QMatrix N = M - p.sigma * QMatrix::identity(n);
    QMatrix term = p.projector;  // N^k p_i
    Eigen::MatrixXd local = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    double scale = 1.0;  // t^k / k!
    for (int k = 0; k < p.multiplicity; ++k) {
      local += scale * term.to_eigen();
      term = N * term;
      scale *= t / (k + 1);
    }
    result += std::exp(to_double(p.sigma) * t) * local;
  }
  return result;
}

}  // namespace secular
