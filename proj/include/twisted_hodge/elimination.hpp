#pragma once

#include <optional>
#include <vector>

#include "twisted_hodge/matrix.hpp"

namespace twisted_hodge {

/// Reduced row echelon form of a matrix over Q(i).
///
/// `reduced` holds only the `rank()` nonzero rows; row r has a leading 1 in
/// column `pivots[r]` and zeros in every other pivot column.
struct EchelonForm {
  Matrix reduced;
  std::vector<Index> pivots;
  Index cols = 0;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/*
 * Fraction-free elimination over Z[i].
 *
 * Every row is first scaled by the lcm of its denominators so that all
 * entries are Gaussian integers; the forward pass is then Bareiss elimination
 * (each update divided exactly by the previous pivot), which keeps the
 * entries bounded by minors of the scaled matrix. Pivots are chosen as the
 * first nonzero entry at or below the current row, so results are
 * deterministic. Only the final normalisation to reduced form divides.
 */
EchelonForm rowReduce(const Matrix& a);

/// Rank via the Bareiss forward pass alone.
Index rank(const Matrix& a);

/// Basis of {x : a·x = 0} as columns, one per free column of `a`, in the
/// order of the free columns.
Matrix nullspaceBasis(const Matrix& a);

/// Exact determinant; throws DimensionError for non-square input.
GaussianRational determinant(const Matrix& a);

/// Exact inverse; throws DimensionError if non-square, DivisionByZero if
/// singular.
Matrix inverse(const Matrix& a);

/// Some x with a·x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

bool isHermitian(const Matrix& a);

/// Exact positive-semidefiniteness of a Hermitian matrix by symmetric
/// elimination on positive diagonal pivots.
bool isPositiveSemidefinite(const Matrix& hermitian);

/// Positive definiteness via leading principal minors.
bool isPositiveDefinite(const Matrix& hermitian);

}  // namespace twisted_hodge
