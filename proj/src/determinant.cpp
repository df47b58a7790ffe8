#include <secular/determinant.hpp>
#include <secular/error.hpp>
#include <secular/reference.hpp>

#include <algorithm>
#include <exception>
#include <string>

namespace secular {

Rat det_rational(const QMatrix& m) {
  if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);

  // Clear denominators row by row, then run Bareiss over the integers.
  std::vector<BigInt> a(n * n);
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return Rat(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
    }
    prev = at(k, k);
  }
  Rat det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

UPoly interpolate_at_integers(const std::vector<Rat>& values) {
  const std::size_t m = values.size();
  std::vector<Rat> dd = values;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
      if (i == level) break;
    }
  UPoly result;
  UPoly basis = UPoly::constant(Rat(1));
  for (std::size_t i = 0; i < m; ++i) {
    result += basis * dd[i];
    basis *= UPoly({Rat(-static_cast<long>(i)), Rat(1)});
  }
  return result;
}

namespace {

UPoly det_pencil_impl(const PMatrix& p, bool parallel) {
  if (!p.is_square()) throw PreconditionError("determinant of a non-square polynomial matrix");
  const std::size_t n = p.rows();
  if (n == 0) return UPoly::constant(Rat(1));
  int bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int d = p.row_degree(i);
    if (d < 0) return {};
    bound += d;
  }
  const long points = bound + 1;
  std::vector<Rat> values(static_cast<std::size_t>(points));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < points; ++k) values[static_cast<std::size_t>(k)] = det_rational(p.evaluate(Rat(k)));
  } else {
    for (long k = 0; k < points; ++k) values[static_cast<std::size_t>(k)] = det_rational(p.evaluate(Rat(k)));
  }
  return interpolate_at_integers(values);
}

PMatrix submatrix(const PMatrix& p, const std::vector<std::size_t>& drop_rows,
                  const std::vector<std::size_t>& drop_cols) {
  auto keep = [](std::size_t n, const std::vector<std::size_t>& drop) {
    std::vector<bool> dropped(n, false);
    for (auto d : drop) {
      if (d >= n) throw PreconditionError("minor: index " + std::to_string(d + 1) + " out of range");
      if (dropped[d]) throw PreconditionError("minor: repeated index " + std::to_string(d + 1));
      dropped[d] = true;
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i)
      if (!dropped[i]) kept.push_back(i);
    return kept;
  };
  auto rows = keep(p.rows(), drop_rows);
  auto cols = keep(p.cols(), drop_cols);
  if (rows.size() != cols.size()) throw PreconditionError("minor: remaining submatrix is not square");
  PMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = p(rows[i], cols[j]);
  return sub;
}

UPoly cofactor(const PMatrix& p, std::size_t i, std::size_t j) {
  UPoly m = det_pencil_impl(submatrix(p, {i}, {j}), false);
  return ((i + j) % 2 == 0) ? m : -m;
}

PMatrix adjugate_impl(const PMatrix& p, bool parallel) {
  if (!p.is_square()) throw PreconditionError("adjugate of a non-square matrix");
  const std::size_t n = p.rows();
  if (n > kMaxAdjugateSize)
    throw PreconditionError("adjugate: size " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxAdjugateSize));
  PMatrix adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = UPoly::constant(Rat(1));
    return adj;
  }
  const long cells = static_cast<long>(n * n);
  if (parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < cells; ++k) {
      const auto i = static_cast<std::size_t>(k) / n;
      const auto j = static_cast<std::size_t>(k) % n;
      try {
        adj(i, j) = cofactor(p, j, i);
      } catch (...) {
#pragma omp critical
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adj(i, j) = cofactor(p, j, i);
  }
  return adj;
}

}  // namespace

UPoly det_pencil(const PMatrix& p) { return det_pencil_impl(p, true); }

UPoly minor(const PMatrix& p, const std::vector<std::size_t>& drop_rows,
            const std::vector<std::size_t>& drop_cols) {
  return det_pencil_impl(submatrix(p, drop_rows, drop_cols), false);
}

PMatrix adjugate_pencil(const PMatrix& p) { return adjugate_impl(p, true); }

QMatrix adjugate(const QMatrix& m) { return adjugate_pencil(PMatrix::constant(m)).evaluate(Rat(0)); }

bool transpose_check(const Pencil& pencil) {
  const PMatrix c = pencil.characteristic_matrix();
  return det_pencil(c) == det_pencil(c.transpose());
}

namespace reference {

UPoly det_pencil(const PMatrix& p) { return det_pencil_impl(p, false); }

PMatrix adjugate_pencil(const PMatrix& p) { return adjugate_impl(p, false); }

}  // namespace reference

}  // namespace secular
