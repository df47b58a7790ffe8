#pragma once

// Independent oracles and fixed-seed generators shared by the test binaries.
// Nothing here calls the library routine it is used to check.

#include <secular/matrix.hpp>
#include <secular/upoly.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

namespace secular::testing {

using Rng = std::mt19937_64;

/// Laplace expansion along the first row.
template <class T, class M>
T cofactor_det(const M& m, std::size_t n, const T& zero, const T& one) {
  if (n == 0) return one;
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t>& left) -> T {
    if (left.empty()) return one;
    T acc = zero;
    for (std::size_t k = 0; k < left.size(); ++k) {
      const std::size_t c = left[k];
      if (m(row, c) == zero) continue;
      std::vector<std::size_t> rest;
      for (std::size_t q = 0; q < left.size(); ++q)
        if (q != k) rest.push_back(left[q]);
      T term = m(row, c) * self(self, row + 1, rest);
      if (k % 2 == 0)
        acc = acc + term;
      else
        acc = acc - term;
    }
    return acc;
  };
  return rec(rec, 0, cols);
}

inline Rat det_oracle(const QMatrix& m) { return cofactor_det<Rat>(m, m.rows(), Rat(0), Rat(1)); }

inline UPoly det_oracle(const PMatrix& m) {
  return cofactor_det<UPoly>(m, m.rows(), UPoly(), UPoly::constant(Rat(1)));
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rat ratio(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline Rat random_rat(Rng& rng, long range, long max_den = 1) {
  return ratio(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

inline QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range, long max_den = 1) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rat(rng, range, max_den);
  return m;
}

inline QMatrix random_symmetric(Rng& rng, std::size_t n, long range, long max_den = 1) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rat(rng, range, max_den);
  return m;
}

inline QMatrix random_invertible(Rng& rng, std::size_t n, long range) {
  for (;;) {
    QMatrix s = random_matrix(rng, n, n, range);
    if (det_oracle(s) != 0) return s;
  }
}

inline QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// Gauss-Jordan inverse, independent of the library's elimination.
inline QMatrix inverse_oracle(const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix a = m, inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a(p, c) == 0) ++p;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(c, j), a(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    const Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rat f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Block-diagonal Jordan matrix; each block is (eigenvalue, size) with ones
/// on the superdiagonal.
inline QMatrix jordan_matrix(const std::vector<std::pair<Rat, int>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += static_cast<std::size_t>(b.second);
  QMatrix j(n, n);
  std::size_t at = 0;
  for (const auto& [sigma, size] : blocks) {
    for (int k = 0; k < size; ++k) {
      j(at + k, at + k) = sigma;
      if (k + 1 < size) j(at + k, at + k + 1) = 1;
    }
    at += static_cast<std::size_t>(size);
  }
  return j;
}

/// Exactly orthogonal rational matrix by the Cayley transform of a random
/// skew matrix: Q = (I - K)(I + K)^{-1}.
inline QMatrix cayley_orthogonal(Rng& rng, std::size_t n, long range) {
  QMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      k(i, j) = random_rat(rng, range);
      k(j, i) = -k(i, j);
    }
  const QMatrix id = QMatrix::identity(n);
  return matmul(id - k, inverse_oracle(id + k));
}

/// Planted generalized eigenproblem s*Phi - Psi. Phi = L^T L + I, the w_j are
/// made Phi-orthogonal by exact Gram-Schmidt and
/// Psi = sum_j s_j Phi w_j w_j^T Phi / d_j with d_j = w_j^T Phi w_j, so the
/// expected theta for a root s is the sum of its rank-one terms.
struct PlantedPair {
  QMatrix phi;
  QMatrix psi;
  std::vector<std::pair<Rat, QMatrix>> thetas;  // ascending roots
};

inline PlantedPair planted_pair(Rng& rng, const std::vector<Rat>& roots, long range = 2) {
  const std::size_t n = roots.size();
  const QMatrix l = random_matrix(rng, n, n, range);
  QMatrix phi = matmul(l.transpose(), l) + QMatrix::identity(n);

  std::vector<QVector> w;
  std::vector<Rat> d;
  while (w.size() < n) {
    QVector v(n);
    for (auto& x : v) x = Rat(uniform(rng, -3, 3));
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Rat c = bilinear(w[k], phi, v) / d[k];
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * w[k][i];
    }
    const Rat norm = bilinear(v, phi, v);
    if (norm == 0) continue;
    w.push_back(v);
    d.push_back(norm);
  }

  PlantedPair out;
  out.psi = QMatrix(n, n);
  std::vector<Rat> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& s : sorted) out.thetas.emplace_back(s, QMatrix(n, n));
  for (std::size_t j = 0; j < n; ++j) {
    const QVector pw = phi * w[j];
    QMatrix term(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) term(a, b) = pw[a] * pw[b] / d[j];
    out.psi += roots[j] * term;
    for (auto& [s, theta] : out.thetas)
      if (s == roots[j]) theta += term;
  }
  phi.mark_symmetric();
  out.psi.mark_symmetric();
  out.phi = phi;
  return out;
}

/// Integer partitions of n, parts descending.
inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int p = std::min(n, max_part); p >= 1; --p)
    for (auto rest : partitions(n - p, p)) {
      rest.insert(rest.begin(), p);
      out.push_back(rest);
    }
  return out;
}

/// Scaling-and-squaring Taylor series for exp(M t).
inline Eigen::MatrixXd expm_taylor_oracle(const Eigen::MatrixXd& m, double t) {
  Eigen::MatrixXd a = m * t;
  int squarings = 0;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  a /= std::pow(2.0, squarings);
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::MatrixXd term = result;
  for (int k = 1; k <= 30; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

inline double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace secular::testing
