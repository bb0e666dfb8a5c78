#include <doctest.h>

#include "helpers.hpp"

using namespace twisted_hodge;
using testing::form;

namespace {

ErrorKind twistError(const std::string& key, const std::string& t1, const std::string& t2) {
  try {
    testing::twisted(key, t1, t2);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("twist validation") {
  const TwistedComplex t = testing::twisted("torus1", "mu1", "0");
  CHECK(formatForm(t.twist.phi, t.basis()) == "mu1 + mubar1");
  const TwistedComplex nak = testing::twisted("nakamura", "1/2*mu1", "0");
  CHECK(formatForm(nak.twist.phi, nak.basis()) == "1/2*mu1 + 1/2*mubar1");
  const TwistedComplex mixed = testing::twisted("torus2", "i*mu1", "mu2");
  CHECK(formatForm(mixed.twist.phi, mixed.basis()) == "i*mu1 + mu2 - i*mubar1 - mubar2");
  CHECK(twistError("nakamura", "mu2", "0") == ErrorKind::NotBottChernClosed);
  CHECK(twistError("iwasawa", "0", "mu3") == ErrorKind::NotBottChernClosed);
  CHECK(twistError("torus1", "mubar1", "0") == ErrorKind::DimensionError);
  CHECK(twistError("torus1", "mu1^mubar1", "0") == ErrorKind::DimensionError);
  CHECK(twistError("torus1", "mu2", "0") == ErrorKind::ParseError);
}

TEST_CASE("NotBottChernClosed reports the residual") {
  try {
    testing::twisted("nakamura", "mu2", "0");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("-1/2*mu1^mu2") != std::string::npos);
  }
}

TEST_CASE("twisted differentials on explicit forms") {
  const TwistedComplex nak = testing::twisted("nakamura", "1/2*mu1", "0");
  const FormBasis& b = nak.basis();
  CHECK(formatForm(applyToForm(nak.delbarTw, b, form(*nak.base, "mubar3")), b) ==
        "1/2*mu1^mubar3 + 1/2*mubar1^mubar3");
  const TwistedComplex t = testing::twisted("torus1", "mu1", "0");
  CHECK(formatForm(applyToForm(t.dPhi, t.basis(), form(*t.base, "1")), t.basis()) ==
        "mu1 + mubar1");
  CHECK(formatForm(applyToForm(t.dPhi, t.basis(), form(*t.base, "mu1")), t.basis()) ==
        "-mu1^mubar1");
  CHECK(formatForm(applyToForm(t.delbarTw, t.basis(), form(*t.base, "1")), t.basis()) == "mu1");
}

TEST_CASE("squared-zero, anticommutator and Leibniz identities") {
  for (const auto& key : catalogKeys()) {
    const CatalogEntry entry = builtinModel(key);
    for (const auto& [t1, t2] : entry.twists) {
      CAPTURE(key);
      CAPTURE(t1);
      CAPTURE(t2);
      const TwistedComplex tc = testing::twisted(key, t1, t2);
      CHECK((tc.delTw * tc.delTw).isZero());
      CHECK((tc.delbarTw * tc.delbarTw).isZero());
      CHECK((tc.delTw * tc.delbarTw + tc.delbarTw * tc.delTw).isZero());
      CHECK((tc.dPhi * tc.dPhi).isZero());
      CHECK(tc.delTw + tc.delbarTw == tc.dPhi);
      CHECK_FALSE(leibnizCheck(tc).has_value());
      CHECK(conjugationSymmetry(tc));
      CHECK(isDoubleComplex(tc) == tc.twist.theta1.isZero());
    }
  }
}

TEST_CASE("Leibniz on Nakamura with alpha = mu2") {
  const TwistedComplex tc = testing::twisted("nakamura", "1/2*mu1", "0");
  const FormBasis& b = tc.basis();
  const GradedOperator lhs = gradedCommutator(tc.delTw, leftMultiplication(b, form(*tc.base, "mu2")));
  CHECK(lhs == leftMultiplication(b, form(*tc.base, "-1/2*mu1^mu2")));
  // and by hand on one monomial
  const Form x = form(*tc.base, "mubar3");
  const Form alpha = form(*tc.base, "mu2");
  const Form lhsForm = applyToForm(tc.delTw, b, alpha.wedge(x));
  const Form rhsForm = applyToForm(tc.base->del, b, alpha).wedge(x) -
                       alpha.wedge(applyToForm(tc.delTw, b, x));
  CHECK(lhsForm == rhsForm);
}

TEST_CASE("conjugation swaps the twisted operators") {
  // conj ∂_(θ₁,θ₂) = ∂̄_(θ₁,−θ₂) conj
  const TwistedComplex tc = testing::twisted("torus2", "(1+i)*mu1", "1/2*mu2");
  const TwistedComplex mirrored = withTwist(tc, tc.twist.theta1,
                                            GaussianRational(-1) * tc.twist.theta2);
  CHECK(tc.base->conjugation * tc.delTw == mirrored.delbarTw * tc.base->conjugation);
  // the swapped pair (θ₂, θ₁) does not satisfy it
  const TwistedComplex swapped = withTwist(tc, tc.twist.theta2, tc.twist.theta1);
  CHECK_FALSE(tc.base->conjugation * tc.delTw == swapped.delbarTw * tc.base->conjugation);
}
