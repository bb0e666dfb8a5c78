#pragma once

#include <Eigen/Core>

#include "twisted_hodge/gaussian_rational.hpp"

namespace twisted_hodge {

using Index = Eigen::Index;
using Matrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

inline Matrix zeroMatrix(Index rows, Index cols) {
  return Matrix::Constant(rows, cols, GaussianRational(0));
}

inline Vector zeroVector(Index size) {
  return Vector::Constant(size, GaussianRational(0));
}

inline Matrix identityMatrix(Index n) {
  Matrix m = zeroMatrix(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline Vector unitVector(Index size, Index i) {
  Vector v = zeroVector(size);
  v(i) = 1;
  return v;
}

/// Entrywise conjugation σ(A).
template <typename Derived>
Matrix conjugate(const Eigen::MatrixBase<Derived>& a) {
  return a.conjugate();
}

template <typename Derived>
bool isZero(const Eigen::MatrixBase<Derived>& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!a(i, j).isZero()) return false;
    }
  }
  return true;
}

/// Shape and entrywise equality; never asserts on mismatched shapes.
template <typename A, typename B>
bool exactlyEqual(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

/// Horizontal concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Vertical concatenation [a ; b].
Matrix vconcat(const Matrix& a, const Matrix& b);

/// a·b, skipping zero entries of a. The exterior-algebra operators are very
/// sparse, so this beats the dense kernel by a wide margin.
Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace twisted_hodge
