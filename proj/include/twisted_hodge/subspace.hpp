#pragma once

#include "twisted_hodge/matrix.hpp"

namespace twisted_hodge {

/// A linear subspace of Q(i)^ambient held by a canonical basis.
///
/// The basis is column-reduced echelon: its transpose is the reduced row
/// echelon form of any spanning set, so two subspaces are equal exactly when
/// their bases are entrywise equal.
class Subspace {
 public:
  Subspace() = default;

  /// Column span of `generators` (any rank).
  static Subspace span(const Matrix& generators);
  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);

  Index ambientDim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  /// other ⊆ *this
  bool contains(const Subspace& other) const;
  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && exactlyEqual(a.basis_, b.basis_);
  }

 private:
  Subspace(Index ambient, Matrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_ = 0;
  Matrix basis_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);

/// {x : a·x = 0}
Subspace kernel(const Matrix& a);

/// Column space of a.
Subspace image(const Matrix& a);

/// a(U)
Subspace image(const Matrix& a, const Subspace& u);

/// {x : a·x ∈ W}
Subspace preimage(const Matrix& a, const Subspace& w);

/// Rank of the map Z₁/B₁ → Z₂/B₂ induced by `carrier`, with exactness
/// verdicts. Preconditions are verified; a violation throws NotAChainMap.
struct QuotientMapVerdict {
  Index rank = 0;
  bool injective = false;
  bool surjective = false;

  bool bijective() const { return injective && surjective; }
  friend bool operator==(const QuotientMapVerdict&,
                         const QuotientMapVerdict&) = default;
};

QuotientMapVerdict inducedQuotientMap(const Subspace& cycles1,
                                      const Subspace& boundaries1,
                                      const Subspace& cycles2,
                                      const Subspace& boundaries2,
                                      const Matrix& carrier);

}  // namespace twisted_hodge
