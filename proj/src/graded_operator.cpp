#include "twisted_hodge/graded_operator.hpp"

#include <string>

#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

GradedOperator::GradedOperator(std::vector<Index> dims, DegreeMap map,
                               Linearity linearity)
    : dims_(std::move(dims)), map_(map), linearity_(linearity) {
  blocks_.reserve(dims_.size());
  for (int k = 0; k <= topDegree(); ++k) {
    const int t = targetDegree(k);
    blocks_.push_back(zeroMatrix(t < 0 ? 0 : dims_[t], dims_[k]));
  }
}

GradedOperator GradedOperator::identity(std::vector<Index> dims) {
  GradedOperator op(std::move(dims), DegreeMap::shift(0));
  for (int k = 0; k <= op.topDegree(); ++k) {
    op.blocks_[k] = identityMatrix(op.dims_[k]);
  }
  return op;
}

int GradedOperator::targetDegree(int k) const {
  const int t = map_(k);
  return (t < 0 || t > topDegree()) ? -1 : t;
}

Vector GradedOperator::apply(int k, const Vector& x) const {
  if (x.size() != dims_.at(k)) {
    fail(ErrorKind::DimensionError, "apply: vector size does not match degree");
  }
  if (isAntilinear()) return multiply(blocks_[k], conjugate(x));
  return multiply(blocks_[k], x);
}

bool GradedOperator::isZero() const {
  for (const auto& b : blocks_) {
    if (!twisted_hodge::isZero(b)) return false;
  }
  return true;
}

void GradedOperator::requireCompatible(const GradedOperator& rhs,
                                       const char* what) const {
  if (dims_ != rhs.dims_) {
    fail(ErrorKind::DimensionError,
         std::string(what) + ": operators live on different graded spaces");
  }
}

GradedOperator GradedOperator::operator*(const GradedOperator& rhs) const {
  requireCompatible(rhs, "composition");
  DegreeMap composed{map_.sign * rhs.map_.sign,
                     map_.sign * rhs.map_.offset + map_.offset};
  GradedOperator out(dims_, composed, compose(linearity_, rhs.linearity_));
  for (int k = 0; k <= topDegree(); ++k) {
    const int mid = rhs.targetDegree(k);
    if (mid < 0 || targetDegree(mid) < 0) continue;
    if (isAntilinear()) {
      out.blocks_[k] = multiply(blocks_[mid], conjugate(rhs.blocks_[k]));
    } else {
      out.blocks_[k] = multiply(blocks_[mid], rhs.blocks_[k]);
    }
  }
  return out;
}

GradedOperator GradedOperator::operator+(const GradedOperator& rhs) const {
  requireCompatible(rhs, "sum");
  if (!(map_ == rhs.map_) || linearity_ != rhs.linearity_) {
    fail(ErrorKind::DimensionError, "sum of operators of different type");
  }
  GradedOperator out = *this;
  for (int k = 0; k <= topDegree(); ++k) out.blocks_[k] += rhs.blocks_[k];
  return out;
}

GradedOperator GradedOperator::operator-(const GradedOperator& rhs) const {
  return *this + (-rhs);
}

GradedOperator GradedOperator::operator-() const {
  GradedOperator out = *this;
  for (auto& b : out.blocks_) b = -b;
  return out;
}

GradedOperator operator*(const GaussianRational& c, const GradedOperator& op) {
  GradedOperator out = op;
  for (auto& b : out.blocks_) b *= c;
  return out;
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
  if (a.dims_ != b.dims_ || !(a.map_ == b.map_)) return false;
  if (a.isZero() && b.isZero()) return true;
  if (a.linearity_ != b.linearity_) return false;
  for (int k = 0; k <= a.topDegree(); ++k) {
    if (!exactlyEqual(a.blocks_[k], b.blocks_[k])) return false;
  }
  return true;
}

GradedOperator gradedCommutator(const GradedOperator& a,
                                const GradedOperator& b) {
  if (a.degreeMap().sign != 1 || b.degreeMap().sign != 1) {
    fail(ErrorKind::DimensionError, "graded commutator needs constant shifts");
  }
  const int parity = (a.degreeMap().offset * b.degreeMap().offset) % 2;
  const GradedOperator ab = a * b;
  const GradedOperator ba = b * a;
  return parity == 0 ? ab - ba : ab + ba;
}

}  // namespace twisted_hodge
