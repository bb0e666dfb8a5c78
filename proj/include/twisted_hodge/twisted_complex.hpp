#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "twisted_hodge/lie_complex.hpp"

namespace twisted_hodge {

/// (θ₁, θ₂) ∈ H^{1,0}_BC with φ = θ₁ + θ̄₁ + θ₂ − θ̄₂.
struct TwistPair {
  Form theta1;
  Form theta2;
  Form phi;

  bool isZero() const { return theta1.isZero() && theta2.isZero(); }
};

/// Parses a (1,0)-form such as "1/2*mu1 - 1/3i*mu2"; "0" is accepted.
/// Throws ParseError, or DimensionError for terms outside span(μ¹..μⁿ).
Form parseTwist(std::string_view text, const FormBasis& basis);

/// Checks ∂θ = ∂̄θ = 0 for both forms (NotBottChernClosed otherwise, with
/// the residual in the message) and derives φ.
TwistPair validateTwist(const InvariantComplex& complex, const Form& theta1,
                        const Form& theta2);

/// The twisted operators
///   ∂_tw = ∂ + L_{θ₂} + L_{θ̄₁},  ∂̄_tw = ∂̄ − L_{θ̄₂} + L_{θ₁},
///   d_φ = d + L_φ = ∂_tw + ∂̄_tw.
struct TwistedComplex {
  std::shared_ptr<const InvariantComplex> base;
  TwistPair twist;
  GradedOperator delTw;
  GradedOperator delbarTw;
  GradedOperator dPhi;
  GradedOperator lTheta1;
  GradedOperator lTheta2;
  GradedOperator lPhi;

  const FormBasis& basis() const { return base->basis; }
  int n() const { return base->n(); }
  const std::vector<Index>& dims() const { return base->dims(); }
};

/// Assembles and self-checks (∂_tw² = ∂̄_tw² = [∂_tw, ∂̄_tw] = d_φ² = 0,
/// d_φ = ∂_tw + ∂̄_tw). A failure is an InternalError.
TwistedComplex assembleTwisted(std::shared_ptr<const InvariantComplex> base,
                               const TwistPair& twist);

/// Validates and assembles in one step.
TwistedComplex twistedComplex(std::shared_ptr<const InvariantComplex> base,
                              const Form& theta1, const Form& theta2);

/// Same model, different twist.
TwistedComplex withTwist(const TwistedComplex& tc, const Form& theta1,
                         const Form& theta2);

struct LeibnizFailure {
  Monomial alpha = 0;
  std::string which;
};

/// [∂_tw, L_α] = L_{∂α} and [∂̄_tw, L_α] = L_{∂̄α} (graded commutators) for
/// every basis monomial α. Returns the first failing α, if any.
std::optional<LeibnizFailure> leibnizCheck(const TwistedComplex& tc);

/// When θ₁ = 0, ∂_tw maps (p,q) into (p+1,q) and ∂̄_tw into (p,q+1).
bool isDoubleComplex(const TwistedComplex& tc);

/// conj ∘ ∂_(θ₁,θ₂) = ∂̄_(θ₁,−θ₂) ∘ conj.
bool conjugationSymmetry(const TwistedComplex& tc);

}  // namespace twisted_hodge
