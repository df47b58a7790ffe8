#pragma once

#include <secular/rational.hpp>
#include <secular/upoly.hpp>

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace secular {

using QVector = std::vector<Rat>;

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const QVector& d);
  static QMatrix from_columns(const std::vector<QVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Rat>& entries() const { return entries_; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  /// Symmetry flag. Setting it verifies the entries (PreconditionError).
  bool symmetric_flag() const { return symmetric_; }
  void mark_symmetric();
  bool is_symmetric() const;

  QVector column(std::size_t j) const;
  QMatrix transpose() const;
  bool is_zero() const;
  Rat max_abs() const;

  QMatrix& operator+=(const QMatrix& rhs);
  QMatrix& operator-=(const QMatrix& rhs);
  QMatrix& operator*=(const Rat& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rat& c) { return a *= c; }
  friend QMatrix operator*(const Rat& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  QMatrix operator-() const { return *this * Rat(-1); }

  /// Entry equality; the symmetry flag is not compared.
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  Eigen::MatrixXd to_eigen() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
  bool symmetric_ = false;
};

/// Row-major matrix of polynomials (a pencil's characteristic matrix).
class PMatrix {
 public:
  PMatrix() = default;
  PMatrix(std::size_t rows, std::size_t cols);

  /// Constant matrix lifted to degree-0 entries.
  static PMatrix constant(const QMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  UPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const UPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  QMatrix evaluate(const Rat& s) const;
  Eigen::MatrixXd evaluate(double s) const;
  PMatrix transpose() const;
  /// Largest entry degree in row i (-1 for a zero row).
  int row_degree(std::size_t i) const;

  friend PMatrix operator*(const PMatrix& a, const PMatrix& b);
  friend bool operator==(const PMatrix&, const PMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UPoly> entries_;
};

/// Which characteristic matrix a pair (A, B) stands for.
enum class Orientation {
  kSAMinusB,  // s*A - B
  kAMinusSB,  // A - s*B  (B = I gives the classical A - sI)
};

/// A square pair (A, B) with its orientation convention.
struct Pencil {
  QMatrix A;
  QMatrix B;
  Orientation orientation = Orientation::kSAMinusB;

  /// Validates shapes; throws PreconditionError.
  Pencil(QMatrix a, QMatrix b, Orientation o);
  /// A - sI
  static Pencil standard(QMatrix a);

  std::size_t size() const { return A.rows(); }
  PMatrix characteristic_matrix() const;
  QMatrix at(const Rat& s) const;
  Eigen::MatrixXd at(double s) const;
  /// The matrix multiplying s (A for sA - B, B for A - sB).
  const QMatrix& lead() const;
  /// The constant part (B for sA - B, A for A - sB), sign-free.
  const QMatrix& tail() const;
  bool is_symmetric() const { return A.is_symmetric() && B.is_symmetric(); }
  Pencil transposed() const;
};

// Exact linear algebra over Q by Gauss-Jordan elimination.
std::size_t rank(const QMatrix& m);
/// Basis of the right nullspace, one vector per free column, in RREF order.
std::vector<QVector> nullspace(const QMatrix& m);
/// Throws PreconditionError when singular.
QMatrix inverse(const QMatrix& m);
/// Solves m x = b for square invertible m.
QVector solve(const QMatrix& m, const QVector& b);

Rat dot(const QVector& a, const QVector& b);
/// a^T M b
Rat bilinear(const QVector& a, const QMatrix& m, const QVector& b);
bool is_zero(const QVector& v);
Eigen::VectorXd to_eigen(const QVector& v);

/// Leading principal minors D_1 .. D_n.
std::vector<Rat> leading_principal_minors(const QMatrix& m);
/// All leading principal minors strictly positive.
bool is_positive_definite(const QMatrix& m);

}  // namespace secular
