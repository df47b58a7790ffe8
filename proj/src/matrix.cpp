#include <secular/determinant.hpp>
#include <secular/error.hpp>
#include <secular/matrix.hpp>

#include <algorithm>
#include <string>

namespace secular {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw PreconditionError("matrix entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw PreconditionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const QVector& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  if (cols.empty()) return {};
  QMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows_) throw PreconditionError("from_columns: ragged columns");
    for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

void QMatrix::mark_symmetric() {
  if (!is_symmetric()) throw PreconditionError("matrix flagged symmetric is not symmetric");
  symmetric_ = true;
}

bool QMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rat& x) { return x == 0; });
}

Rat QMatrix::max_abs() const {
  Rat m(0);
  for (const auto& x : entries_) m = std::max(m, Rat(abs(x)));
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  symmetric_ = symmetric_ && rhs.symmetric_;
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw PreconditionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  symmetric_ = symmetric_ && rhs.symmetric_;
  return *this;
}

QMatrix& QMatrix::operator*=(const Rat& c) {
  for (auto& x : entries_) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols_ != v.size()) throw PreconditionError("matrix-vector product: shape mismatch");
  QVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Eigen::MatrixXd QMatrix::to_eigen() const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (*this)(i, j).get_d();
  return m;
}

PMatrix::PMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

PMatrix PMatrix::constant(const QMatrix& m) {
  PMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = UPoly::constant(m(i, j));
  return p;
}

QMatrix PMatrix::evaluate(const Rat& s) const {
  QMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m(k / cols_, k % cols_) = entries_[k](s);
  return m;
}

Eigen::MatrixXd PMatrix::evaluate(double s) const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t k = 0; k < entries_.size(); ++k)
    m(static_cast<Eigen::Index>(k / cols_), static_cast<Eigen::Index>(k % cols_)) = entries_[k].eval(s);
  return m;
}

PMatrix PMatrix::transpose() const {
  PMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

int PMatrix::row_degree(std::size_t i) const {
  int d = -1;
  for (std::size_t j = 0; j < cols_; ++j) d = std::max(d, (*this)(i, j).degree());
  return d;
}

PMatrix operator*(const PMatrix& a, const PMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("polynomial matrix product: shape mismatch");
  PMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

Pencil::Pencil(QMatrix a, QMatrix b, Orientation o) : A(std::move(a)), B(std::move(b)), orientation(o) {
  if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
    throw PreconditionError("pencil matrices must be square and of equal size");
}

Pencil Pencil::standard(QMatrix a) {
  const std::size_t n = a.rows();
  return Pencil(std::move(a), QMatrix::identity(n), Orientation::kAMinusSB);
}

PMatrix Pencil::characteristic_matrix() const {
  const std::size_t n = size();
  PMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (orientation == Orientation::kSAMinusB)
        p(i, j) = UPoly({Rat(-B(i, j)), A(i, j)});
      else
        p(i, j) = UPoly({A(i, j), Rat(-B(i, j))});
    }
  return p;
}

QMatrix Pencil::at(const Rat& s) const {
  return orientation == Orientation::kSAMinusB ? s * A - B : A - s * B;
}

Eigen::MatrixXd Pencil::at(double s) const {
  return orientation == Orientation::kSAMinusB ? Eigen::MatrixXd(s * A.to_eigen() - B.to_eigen())
                                               : Eigen::MatrixXd(A.to_eigen() - s * B.to_eigen());
}

const QMatrix& Pencil::lead() const { return orientation == Orientation::kSAMinusB ? A : B; }

const QMatrix& Pencil::tail() const { return orientation == Orientation::kSAMinusB ? B : A; }

Pencil Pencil::transposed() const { return Pencil(A.transpose(), B.transpose(), orientation); }

namespace {

struct Rref {
  QMatrix m;
  std::vector<std::size_t> pivots;
};

Rref rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rat inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

QVector solve(const QMatrix& m, const QVector& b) { return inverse(m) * b; }

Rat dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: length mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat bilinear(const QVector& a, const QMatrix& m, const QVector& b) { return dot(a, m * b); }

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Eigen::VectorXd to_eigen(const QVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

std::vector<Rat> leading_principal_minors(const QMatrix& m) {
  if (!m.is_square()) throw PreconditionError("leading minors of a non-square matrix");
  std::vector<Rat> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    QMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    out.push_back(det_rational(sub));
  }
  return out;
}

bool is_positive_definite(const QMatrix& m) {
  if (!m.is_symmetric()) return false;
  for (const auto& d : leading_principal_minors(m))
    if (d <= 0) return false;
  return true;
}

}  // namespace secular
