#include <secular/error.hpp>
#include <secular/oscillate.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace secular {

Eigen::VectorXd ModalSolution::position(double t) const {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& m : modes) {
    if (m.rigid)
      y += (m.drift_offset + m.drift_rate * t) * m.shape;
    else
      y += m.amplitude * std::sin(m.omega * t + m.phase) * m.shape;
  }
  return y;
}

Eigen::VectorXd ModalSolution::velocity(double t) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& m : modes) {
    if (m.rigid)
      v += m.drift_rate * m.shape;
    else
      v += m.amplitude * m.omega * std::cos(m.omega * t + m.phase) * m.shape;
  }
  return v;
}

bool ModalSolution::has_drift() const {
  for (const auto& m : modes)
    if (m.rigid && m.drift_rate != 0.0) return true;
  return false;
}

ModalSolution solve_modal(const MechModel& model, const InitialConditions& ic) {
  const std::size_t n = model.size();
  if (ic.Y.size() != n || ic.V.size() != n)
    throw PreconditionError("initial conditions must have dimension " + std::to_string(n));
  const Pencil pencil = model.pencil();
  if (!pencil.is_symmetric()) throw PreconditionError("modal solution needs symmetric A and B");
  if (!is_positive_definite(model.A)) throw PreconditionError("modal solution needs A positive definite");

  const SpectralDecomp dec = decompose(pencil);
  const Eigen::MatrixXd A = model.A.to_eigen();
  const Eigen::VectorXd AY = A * to_eigen(ic.Y);
  const Eigen::VectorXd AV = A * to_eigen(ic.V);

  ModalSolution sol;
  sol.dim = n;
  for (const auto& rv : dec.roots) {
    const Rat k = rv.root.midpoint();
    if (k < 0)
      throw PreconditionError("frequency equation has a negative root K = " + std::to_string(to_double(k)) +
                              ": exponential growth, no modal solution");
    std::vector<Eigen::VectorXd> shapes = rv.numeric;
    for (std::size_t i = 0; i < rv.exact.size(); ++i)
      shapes.push_back(to_eigen(rv.exact[i]) / std::sqrt(to_double(rv.squared_norms[i])));
    for (auto& shape : shapes) {
      Mode mode;
      mode.K = rv.root;
      mode.shape = std::move(shape);
      const double p = mode.shape.dot(AY);
      const double q = mode.shape.dot(AV);
      if (k == 0) {
        mode.rigid = true;
        mode.drift_offset = p;
        mode.drift_rate = q;
      } else {
        mode.omega = std::sqrt(to_double(k));
        const double qw = q / mode.omega;
        mode.amplitude = std::hypot(p, qw);
        double phase = std::atan2(p, qw);
        if (phase < 0) phase += 2 * std::numbers::pi;
        if (phase >= 2 * std::numbers::pi) phase = 0.0;
        mode.phase = mode.amplitude == 0.0 ? 0.0 : phase;
      }
      sol.modes.push_back(std::move(mode));
    }
  }
  return sol;
}

double modal_bound(const ModalSolution& sol) {
  double bound = 0.0;
  for (const auto& m : sol.modes) {
    const double s = m.shape.cwiseAbs().maxCoeff();
    if (m.rigid) {
      if (m.drift_rate != 0.0) return std::numeric_limits<double>::infinity();
      bound += std::abs(m.drift_offset) * s;
    } else {
      bound += std::abs(m.amplitude) * s;
    }
  }
  return bound;
}

double energy(const MechModel& model, const ModalSolution& sol, double t) {
  const Eigen::VectorXd y = sol.position(t);
  const Eigen::VectorXd v = sol.velocity(t);
  return 0.5 * (v.dot(model.A.to_eigen() * v) + y.dot(model.B.to_eigen() * y));
}

}  // namespace secular
