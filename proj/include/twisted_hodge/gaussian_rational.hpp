#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace twisted_hodge {

/// Exact element re + im·i of the field Q(i).
///
/// Both parts are GMP rationals, which are kept in canonical form (positive
/// denominator, coprime numerator/denominator) after every operation, so
/// equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;

  template <std::integral T>
  GaussianRational(T value) : re_(static_cast<long>(value)) {}  // NOLINT

  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Builds (reNum/reDen) + (imNum/imDen)·i; throws DivisionByZero on a zero
  /// denominator.
  static GaussianRational fromParts(const mpz_class& reNum,
                                    const mpz_class& reDen,
                                    const mpz_class& imNum = 0,
                                    const mpz_class& imDen = 1);

  static GaussianRational imaginaryUnit() { return {0, 1}; }

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }

  /// Squared modulus re² + im².
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  /// Multiplicative inverse; throws DivisionByZero for 0.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    return a * b.inverse();
  }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {-a.re_, -a.im_};
  }
  friend bool operator==(const GaussianRational& a,
                         const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a,
                         const GaussianRational& b) {
    return !(a == b);
  }

  friend GaussianRational conj(const GaussianRational& x) {
    return {x.re_, -x.im_};
  }
  friend const mpq_class& real(const GaussianRational& x) { return x.re_; }
  friend const mpq_class& imag(const GaussianRational& x) { return x.im_; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Canonical text form: "a/b", "c/di", or "a/b+c/di" (integers without a
/// denominator).
std::string formatScalar(const GaussianRational& x);

/// Parses the coefficient grammar `[-]a/b` optionally followed by
/// `[+|-]c/d i`, a bare imaginary part `c/d i`, or `i`. Whitespace is ignored.
GaussianRational parseGaussianRational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace twisted_hodge

namespace Eigen {

template <>
struct NumTraits<twisted_hodge::GaussianRational>
    : GenericNumTraits<twisted_hodge::GaussianRational> {
  using Real = twisted_hodge::GaussianRational;
  using NonInteger = twisted_hodge::GaussianRational;
  using Nested = twisted_hodge::GaussianRational;
  using Literal = twisted_hodge::GaussianRational;

  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

// Real == Scalar makes Eigen's two generic specializations ambiguous.
template <typename BinaryOp>
struct ScalarBinaryOpTraits<twisted_hodge::GaussianRational,
                            twisted_hodge::GaussianRational, BinaryOp> {
  using ReturnType = twisted_hodge::GaussianRational;
};

}  // namespace Eigen
