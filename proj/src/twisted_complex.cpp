#include "twisted_hodge/twisted_complex.hpp"

#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

Form parseTwist(std::string_view text, const FormBasis& basis) {
  const Form theta = parseForm(text, basis);
  if (!theta.isBihomogeneous(basis, {1, 0})) {
    fail(ErrorKind::DimensionError,
         "twist '" + std::string(text) + "' is not a (1,0)-form");
  }
  return theta;
}

TwistPair validateTwist(const InvariantComplex& complex, const Form& theta1,
                        const Form& theta2) {
  const FormBasis& basis = complex.basis;
  const Form* thetas[] = {&theta1, &theta2};
  for (int idx = 0; idx < 2; ++idx) {
    const Form& theta = *thetas[idx];
    if (!theta.isBihomogeneous(basis, {1, 0})) {
      fail(ErrorKind::DimensionError,
           "theta" + std::to_string(idx + 1) + " is not a (1,0)-form");
    }
    const Form dTheta = applyToForm(complex.del, basis, theta);
    const Form dbarTheta = applyToForm(complex.delbar, basis, theta);
    if (!dTheta.isZero() || !dbarTheta.isZero()) {
      fail(ErrorKind::NotBottChernClosed,
           "theta" + std::to_string(idx + 1) + " = " + formatForm(theta, basis) +
               " is not Bott-Chern closed: del = " + formatForm(dTheta, basis) +
               ", delbar = " + formatForm(dbarTheta, basis));
    }
  }
  TwistPair pair{theta1, theta2, {}};
  pair.phi = theta1 + theta1.conjugate(basis) + theta2 - theta2.conjugate(basis);
  if (!applyToForm(complex.d, basis, pair.phi).isZero()) {
    fail(ErrorKind::InternalError, "d phi != 0 for Bott-Chern closed twist");
  }
  return pair;
}

namespace {

void requireIdentity(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InternalError, "twisted complex: " + what);
}

}  // namespace

TwistedComplex assembleTwisted(std::shared_ptr<const InvariantComplex> base,
                               const TwistPair& twist) {
  TwistedComplex tc;
  tc.base = std::move(base);
  tc.twist = twist;
  const FormBasis& basis = tc.basis();
  const Form theta1bar = twist.theta1.conjugate(basis);
  const Form theta2bar = twist.theta2.conjugate(basis);

  tc.lTheta1 = leftMultiplication(basis, twist.theta1);
  tc.lTheta2 = leftMultiplication(basis, twist.theta2);
  tc.lPhi = leftMultiplication(basis, twist.phi);
  const GradedOperator lTheta1bar = leftMultiplication(basis, theta1bar);
  const GradedOperator lTheta2bar = leftMultiplication(basis, theta2bar);

  if (twist.isZero()) {
    tc.delTw = tc.base->del;
    tc.delbarTw = tc.base->delbar;
    tc.dPhi = tc.base->d;
  } else {
    // L_0 has degree shift 0; only add the multiplication terms that exist.
    auto plus = [](GradedOperator acc, const Form& f, const GradedOperator& l,
                   int sign) {
      if (f.isZero()) return acc;
      return sign > 0 ? acc + l : acc - l;
    };
    tc.delTw = plus(plus(tc.base->del, twist.theta2, tc.lTheta2, 1), theta1bar,
                    lTheta1bar, 1);
    tc.delbarTw = plus(plus(tc.base->delbar, theta2bar, lTheta2bar, -1),
                       twist.theta1, tc.lTheta1, 1);
    tc.dPhi = plus(tc.base->d, twist.phi, tc.lPhi, 1);
  }

  requireIdentity(tc.delTw + tc.delbarTw == tc.dPhi, "d_phi != del_tw + delbar_tw");
  requireIdentity((tc.delTw * tc.delTw).isZero(), "del_tw^2 != 0");
  requireIdentity((tc.delbarTw * tc.delbarTw).isZero(), "delbar_tw^2 != 0");
  requireIdentity((tc.delTw * tc.delbarTw + tc.delbarTw * tc.delTw).isZero(),
                  "del_tw delbar_tw + delbar_tw del_tw != 0");
  requireIdentity((tc.dPhi * tc.dPhi).isZero(), "d_phi^2 != 0");
  return tc;
}

TwistedComplex twistedComplex(std::shared_ptr<const InvariantComplex> base,
                              const Form& theta1, const Form& theta2) {
  const TwistPair pair = validateTwist(*base, theta1, theta2);
  return assembleTwisted(std::move(base), pair);
}

TwistedComplex withTwist(const TwistedComplex& tc, const Form& theta1,
                         const Form& theta2) {
  return twistedComplex(tc.base, theta1, theta2);
}

std::optional<LeibnizFailure> leibnizCheck(const TwistedComplex& tc) {
  const FormBasis& basis = tc.basis();
  for (int r = 0; r <= basis.topDegree(); ++r) {
    for (Monomial m : basis.monomials(r)) {
      const Form alpha = Form::monomial(m);
      const GradedOperator lAlpha = leftMultiplication(basis, alpha);
      const Form delAlpha = applyToForm(tc.base->del, basis, alpha);
      const Form delbarAlpha = applyToForm(tc.base->delbar, basis, alpha);
      GradedOperator expectedDel = leftMultiplication(basis, delAlpha);
      GradedOperator expectedDelbar = leftMultiplication(basis, delbarAlpha);
      // L_0 comes out with shift 0; compare against zero of the right shift.
      const GradedOperator lhsDel = gradedCommutator(tc.delTw, lAlpha);
      const GradedOperator lhsDelbar = gradedCommutator(tc.delbarTw, lAlpha);
      const bool delOk = delAlpha.isZero() ? lhsDel.isZero() : lhsDel == expectedDel;
      const bool delbarOk =
          delbarAlpha.isZero() ? lhsDelbar.isZero() : lhsDelbar == expectedDelbar;
      if (!delOk) return LeibnizFailure{m, "del"};
      if (!delbarOk) return LeibnizFailure{m, "delbar"};
    }
  }
  return std::nullopt;
}

bool isDoubleComplex(const TwistedComplex& tc) {
  return shiftsBidegree(tc.delTw, tc.basis(), 1, 0) &&
         shiftsBidegree(tc.delbarTw, tc.basis(), 0, 1);
}

bool conjugationSymmetry(const TwistedComplex& tc) {
  const TwistedComplex mirrored =
      withTwist(tc, tc.twist.theta1, GaussianRational(-1) * tc.twist.theta2);
  const GradedOperator& conj = tc.base->conjugation;
  return conj * tc.delTw == mirrored.delbarTw * conj &&
         conj * tc.delbarTw == mirrored.delTw * conj;
}

}  // namespace twisted_hodge
