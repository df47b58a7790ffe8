#pragma once

#include <secular/matrix.hpp>

#include <cstddef>
#include <vector>

namespace secular {

/// Largest size accepted by adjugate_pencil (entrywise minors).
inline constexpr std::size_t kMaxAdjugateSize = 8;

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rat det_rational(const QMatrix& m);

/// Determinant polynomial of a square polynomial matrix, by evaluation at the
/// integers 0..D and interpolation, D = sum of row degrees. Evaluations run
/// in parallel (OpenMP).
UPoly det_pencil(const PMatrix& p);

/// Complementary minor after removing the given rows and columns (0-based).
UPoly minor(const PMatrix& p, const std::vector<std::size_t>& drop_rows,
            const std::vector<std::size_t>& drop_cols);

/// Transposed matrix of signed cofactors: p * adj(p) = det(p) * I.
/// Entries are computed in parallel; n <= kMaxAdjugateSize.
PMatrix adjugate_pencil(const PMatrix& p);

/// Same for a constant matrix.
QMatrix adjugate(const QMatrix& m);

/// det(sA - B) == det(sA^T - B^T); Lagrange's mirror-system observation.
bool transpose_check(const Pencil& pencil);

/// Interpolating polynomial through (0, v0), (1, v1), ...
UPoly interpolate_at_integers(const std::vector<Rat>& values);

}  // namespace secular
