#include "twisted_hodge/subspace.hpp"

#include "twisted_hodge/elimination.hpp"
#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

Subspace Subspace::span(const Matrix& generators) {
  const Index ambient = generators.rows();
  if (generators.cols() == 0 || ambient == 0) {
    return Subspace(ambient, Matrix(ambient, 0));
  }
  const EchelonForm e = rowReduce(generators.transpose());
  return Subspace(ambient, e.reduced.transpose());
}

Subspace Subspace::zero(Index ambient) {
  return Subspace(ambient, Matrix(ambient, 0));
}

Subspace Subspace::full(Index ambient) {
  return Subspace(ambient, identityMatrix(ambient));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    fail(ErrorKind::DimensionError, "subspace containment: ambient mismatch");
  }
  if (other.dim() == 0) return true;
  if (other.dim() > dim()) return false;
  return rank(hconcat(basis_, other.basis_)) == dim();
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) {
    fail(ErrorKind::DimensionError, "vector membership: ambient mismatch");
  }
  if (isZero(v)) return true;
  return rank(hconcat(basis_, v)) == dim();
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambientDim() != v.ambientDim()) {
    fail(ErrorKind::DimensionError, "subspace sum: ambient mismatch");
  }
  return Subspace::span(hconcat(u.basis(), v.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  if (u.ambientDim() != v.ambientDim()) {
    fail(ErrorKind::DimensionError, "subspace intersection: ambient mismatch");
  }
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambientDim());
  // U·a = V·b  ⇔  [U | -V]·(a, b) = 0
  const Matrix relations = nullspaceBasis(hconcat(u.basis(), -v.basis()));
  return Subspace::span(u.basis() * relations.topRows(u.dim()));
}

Subspace kernel(const Matrix& a) {
  return Subspace::span(nullspaceBasis(a));
}

Subspace image(const Matrix& a) { return Subspace::span(a); }

Subspace image(const Matrix& a, const Subspace& u) {
  if (a.cols() != u.ambientDim()) {
    fail(ErrorKind::DimensionError, "image: operator/subspace size mismatch");
  }
  return Subspace::span(a * u.basis());
}

Subspace preimage(const Matrix& a, const Subspace& w) {
  if (a.rows() != w.ambientDim()) {
    fail(ErrorKind::DimensionError, "preimage: operator/subspace mismatch");
  }
  // a·x = W·b  ⇔  [a | -W]·(x, b) = 0
  const Matrix relations = nullspaceBasis(hconcat(a, -w.basis()));
  return Subspace::span(relations.topRows(a.cols()));
}

QuotientMapVerdict inducedQuotientMap(const Subspace& cycles1,
                                      const Subspace& boundaries1,
                                      const Subspace& cycles2,
                                      const Subspace& boundaries2,
                                      const Matrix& carrier) {
  if (carrier.cols() != cycles1.ambientDim() ||
      carrier.rows() != cycles2.ambientDim() ||
      boundaries1.ambientDim() != cycles1.ambientDim() ||
      boundaries2.ambientDim() != cycles2.ambientDim()) {
    fail(ErrorKind::DimensionError, "induced quotient map: shape mismatch");
  }
  if (!cycles1.contains(boundaries1) || !cycles2.contains(boundaries2)) {
    fail(ErrorKind::NotAChainMap, "boundaries not contained in cycles");
  }
  const Subspace carriedCycles = image(carrier, cycles1);
  if (!cycles2.contains(carriedCycles) ||
      !boundaries2.contains(image(carrier, boundaries1))) {
    fail(ErrorKind::NotAChainMap, "carrier does not respect cycles/boundaries");
  }
  QuotientMapVerdict out;
  const Subspace reached = sum(carriedCycles, boundaries2);
  out.rank = reached.dim() - boundaries2.dim();
  out.surjective = reached.contains(cycles2);
  const Subspace killed = intersection(cycles1, preimage(carrier, boundaries2));
  out.injective = boundaries1.contains(killed);
  return out;
}

}  // namespace twisted_hodge
