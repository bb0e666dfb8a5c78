#pragma once

#include <vector>

#include "twisted_hodge/matrix.hpp"

namespace twisted_hodge {

enum class Linearity { Linear, Antilinear };

inline Linearity compose(Linearity a, Linearity b) {
  return a == b ? Linearity::Linear : Linearity::Antilinear;
}

/// Affine degree map k ↦ sign·k + offset. Ordinary operators use sign = +1
/// (a constant shift); the Hodge star uses k ↦ 2n − k.
struct DegreeMap {
  int sign = 1;
  int offset = 0;

  int operator()(int k) const { return sign * k + offset; }
  static DegreeMap shift(int s) { return {1, s}; }
  static DegreeMap reflection(int top) { return {-1, top}; }
  friend bool operator==(const DegreeMap&, const DegreeMap&) = default;
};

/// An operator on a graded space ⊕_k V_k stored as one dense block per source
/// degree. Block k maps coordinates of V_k to coordinates of V_{map(k)}; when
/// map(k) is out of range the block has zero rows.
///
/// An antilinear operator T acts as T(x) = block·conj(x), so composition is
/// (A,a)∘(B,b) = (A·σᵃ(B), a⊕b) with σ entrywise conjugation.
class GradedOperator {
 public:
  GradedOperator() = default;

  /// Zero operator with the given degree map.
  GradedOperator(std::vector<Index> dims, DegreeMap map,
                 Linearity linearity = Linearity::Linear);

  static GradedOperator identity(std::vector<Index> dims);

  const std::vector<Index>& dims() const { return dims_; }
  int topDegree() const { return static_cast<int>(dims_.size()) - 1; }
  DegreeMap degreeMap() const { return map_; }
  Linearity linearity() const { return linearity_; }
  bool isAntilinear() const { return linearity_ == Linearity::Antilinear; }

  /// Target degree of block k, or -1 when it falls outside the complex.
  int targetDegree(int k) const;

  const Matrix& block(int k) const { return blocks_.at(k); }
  Matrix& block(int k) { return blocks_.at(k); }

  /// Applies the operator to a coordinate vector of degree k.
  Vector apply(int k, const Vector& x) const;

  bool isZero() const;

  GradedOperator operator*(const GradedOperator& rhs) const;
  GradedOperator operator+(const GradedOperator& rhs) const;
  GradedOperator operator-(const GradedOperator& rhs) const;
  GradedOperator operator-() const;
  /// Left scalar multiple c·T.
  friend GradedOperator operator*(const GaussianRational& c,
                                  const GradedOperator& op);

  friend bool operator==(const GradedOperator& a, const GradedOperator& b);

 private:
  void requireCompatible(const GradedOperator& rhs, const char* what) const;

  std::vector<Index> dims_;
  DegreeMap map_;
  Linearity linearity_ = Linearity::Linear;
  std::vector<Matrix> blocks_;
};

/// Graded commutator [A, B] = A∘B − (−1)^{|A||B|} B∘A for operators of
/// constant degree shift.
GradedOperator gradedCommutator(const GradedOperator& a,
                                const GradedOperator& b);

}  // namespace twisted_hodge
