#include <secular/error.hpp>
#include <secular/oscillate.hpp>

#include <algorithm>
#include <cmath>

namespace secular {
namespace {

template <class Eval>
Trajectory sample(Eval&& eval, std::size_t dim, const TimeGrid& grid, bool parallel) {
  if (grid.steps < 0 || grid.t_max < 0) throw PreconditionError("time grid: steps and t_max must be >= 0");
  const int points = grid.steps + 1;
  Trajectory tr;
  tr.t.resize(static_cast<std::size_t>(points));
  tr.values.resize(points, static_cast<Eigen::Index>(dim));
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < points; ++i) {
      tr.t[static_cast<std::size_t>(i)] = grid.at(i);
      tr.values.row(i) = eval(grid.at(i)).transpose();
    }
  } else {
    for (int i = 0; i < points; ++i) {
      tr.t[static_cast<std::size_t>(i)] = grid.at(i);
      tr.values.row(i) = eval(grid.at(i)).transpose();
    }
  }
  tr.sup_norm = tr.values.size() == 0 ? 0.0 : tr.values.cwiseAbs().maxCoeff();
  return tr;
}

}  // namespace

Trajectory sample_trajectory(const ModalSolution& sol, const TimeGrid& grid) {
  return sample([&](double t) { return sol.position(t); }, sol.dim, grid, true);
}

Trajectory sample_trajectory(const JordanSolution& sol, const TimeGrid& grid) {
  return sample([&](double t) { return sol.at(t); }, sol.dim, grid, true);
}

namespace reference {

Trajectory sample_trajectory(const ModalSolution& sol, const TimeGrid& grid) {
  return sample([&](double t) { return sol.position(t); }, sol.dim, grid, false);
}

Trajectory sample_trajectory(const JordanSolution& sol, const TimeGrid& grid) {
  return sample([&](double t) { return sol.at(t); }, sol.dim, grid, false);
}

}  // namespace reference

double modal_residual(const MechModel& model, const ModalSolution& sol, const TimeGrid& grid, double h) {
  const Eigen::MatrixXd A = model.A.to_eigen();
  const Eigen::MatrixXd B = model.B.to_eigen();
  const double b_norm = B.cwiseAbs().rowwise().sum().maxCoeff();
  double worst = 0.0;
  for (int i = 0; i <= grid.steps; ++i) {
    const double t = grid.at(i);
    const Eigen::VectorXd y = sol.position(t);
    // second difference per mode via sin(x+d) + sin(x-d) - 2 sin x = -4 sin x sin^2(d/2),
    // so the phase is rounded once instead of three times
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(y.size());
    for (const auto& m : sol.modes)
      if (!m.rigid)
        acc += m.amplitude * std::sin(m.omega * t + m.phase) * (-4.0 * std::pow(std::sin(m.omega * h / 2), 2)) *
               m.shape;
    acc /= h * h;
    const Eigen::VectorXd inertial = A * acc;
    const Eigen::VectorXd elastic = B * y;
    const double scale = std::max({inertial.cwiseAbs().maxCoeff(), elastic.cwiseAbs().maxCoeff(),
                                   b_norm * y.cwiseAbs().maxCoeff()});
    if (scale == 0.0) continue;
    worst = std::max(worst, (inertial + elastic).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

double jordan_residual(const QMatrix& M, const JordanSolution& sol, const TimeGrid& grid, double h) {
  const Eigen::MatrixXd Md = M.to_eigen();
  const double m_norm = Md.size() == 0 ? 0.0 : Md.cwiseAbs().rowwise().sum().maxCoeff();
  double worst = 0.0;
  for (int i = 0; i <= grid.steps; ++i) {
    const double t = grid.at(i);
    const Eigen::VectorXd x = sol.at(t);
    const Eigen::VectorXd dx = (sol.at(t + h) - sol.at(t - h)) / (2 * h);
    const Eigen::VectorXd mx = Md * x;
    const double scale =
        std::max({dx.cwiseAbs().maxCoeff(), mx.cwiseAbs().maxCoeff(), m_norm * x.cwiseAbs().maxCoeff()});
    if (scale == 0.0) continue;
    worst = std::max(worst, (dx - mx).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

}  // namespace secular
