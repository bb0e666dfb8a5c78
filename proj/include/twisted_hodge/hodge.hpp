#pragma once

#include <map>
#include <string>
#include <vector>

#include "twisted_hodge/cohomology.hpp"

namespace twisted_hodge {

/// Invariant Hermitian metric given by the Gram matrix G of μ¹..μⁿ.
///
/// ⟨μʲ, μᵏ⟩ = G_jk, ⟨μ̄ʲ, μ̄ᵏ⟩ = conj(G_jk), mixed pairings vanish, and
/// ⟨e_I, e_J⟩ = det(⟨e_i, e_j⟩) on monomials. `innerProduct[k]` holds M_k
/// with M[a][b] = ⟨e_b, e_a⟩, so ⟨x, y⟩ = yᴴ·M_k·x.
///
/// ω = i Σ conj(G⁻¹)_jk μʲ∧μ̄ᵏ and vol = ωⁿ/n!.
struct Metric {
  Matrix gram;
  std::vector<Matrix> innerProduct;
  std::vector<Matrix> innerProductInverse;
  Form omega;
  Form dOmega;
  Form vol;
  bool kahler = false;
};

/// Throws BadMetric unless gram is an n×n Hermitian positive-definite matrix.
Metric buildMetric(const InvariantComplex& complex, const Matrix& gram);
Metric buildMetric(const InvariantComplex& complex);

GaussianRational innerProduct(const Metric& metric, int k, const Vector& x,
                              const Vector& y);

/// The antilinear star, degree k ↦ 2n − k, fixed by x ∧ ∗̄y = ⟨x, y⟩ vol.
GradedOperator hodgeStar(const InvariantComplex& complex, const Metric& metric);

/// A* = M_src⁻¹ Aᴴ M_tgt blockwise, for a linear operator.
GradedOperator gramAdjoint(const GradedOperator& op, const Metric& metric);

/// d vanishes into the top degree (needed for the star formulas).
bool isUnimodular(const InvariantComplex& complex);

struct Adjoints {
  GradedOperator delTw;
  GradedOperator delbarTw;
  GradedOperator dPhi;
  GradedOperator lambdaPhi;
  GradedOperator lambdaOmega;
};

/// Gram-based adjoints.
Adjoints gramAdjoints(const TwistedComplex& tc, const Metric& metric);

/// Star-based adjoints:
///   Λ_α = (−1)^{r(m−r)} ∗̄⁻¹ L_α ∗̄ on degree m, for α of degree r,
///   d_φ* = −∗̄ d_{−φ} ∗̄,
///   ∂_tw* = −∗̄ ∂_(−θ₁,−θ₂) ∗̄,  ∂̄_tw* = −∗̄ ∂̄_(−θ₁,−θ₂) ∗̄.
/// Throws NotUnimodular when the model is not unimodular.
Adjoints starAdjoints(const TwistedComplex& tc, const Metric& metric);

/// Both constructions; AdjointMismatch if they differ anywhere.
Adjoints checkedAdjoints(const TwistedComplex& tc, const Metric& metric);

/// Λ_α as the Gram adjoint of L_α.
GradedOperator lambda(const TwistedComplex& tc, const Metric& metric,
                      const Form& alpha);

struct Laplacians {
  GradedOperator dPhi;
  GradedOperator del;
  GradedOperator delbar;
  GradedOperator bc;
  GradedOperator a;

  const GradedOperator& of(Theory t) const;
};

/// The five Laplacians, assembled term by term:
///   Δ_BC = (∂∂̄)(∂∂̄)* + (∂∂̄)*(∂∂̄) + (∂̄*∂)(∂̄*∂)* + (∂̄*∂)*(∂̄*∂) + ∂̄*∂̄ + ∂*∂
///   Δ_A  = ∂∂* + ∂̄∂̄* + (∂∂̄)*(∂∂̄) + (∂∂̄)(∂∂̄)* + (∂̄∂*)*(∂̄∂*) + (∂̄∂*)(∂̄∂*)*
Laplacians laplacians(const TwistedComplex& tc, const Adjoints& adj);

/// ⟨Δx, y⟩ = ⟨x, Δy⟩ and ⟨Δx, x⟩ ≥ 0, both checked exactly on M_k·Δ_k.
bool isSelfAdjoint(const GradedOperator& op, const Metric& metric);
bool isPositiveSemidefinite(const GradedOperator& op, const Metric& metric);

/// dim ker Δ per degree.
std::vector<long> kernelDims(const GradedOperator& op);

using HarmonicDims = std::map<Theory, std::vector<long>>;

/// Builds the Laplacians, checks self-adjointness and positivity
/// (InternalError) and that dim ker Δ_♯ = h_♯ (HodgeIsoViolation).
HarmonicDims harmonicDims(const TwistedCohomology& h, const Metric& metric);

/// The four intertwinings ∗̄Δ_{d_φ} = Δ_{d_{φ'}}∗̄, ∗̄Δ_∂ = Δ_∂'∗̄,
/// ∗̄Δ_∂̄ = Δ_∂̄'∗̄, ∗̄Δ_BC = Δ_A'∗̄ against the twist (θ₁', θ₂'), and the
/// induced dimension equalities h(k) = h'(2n − k).
struct DualityRecord {
  std::vector<std::pair<std::string, bool>> operatorChecks;
  std::vector<std::pair<std::string, bool>> dimensionChecks;

  bool holds() const;
};

DualityRecord starDuality(const TwistedComplex& tc, const Metric& metric,
                          const Form& dualTheta1, const Form& dualTheta2);

/// Against (−θ₁, −θ₂); throws DualityViolation on failure.
DualityRecord requireStarDuality(const TwistedComplex& tc, const Metric& metric);

struct KahlerRecord {
  std::vector<std::pair<std::string, bool>> checks;

  bool holds() const;
};

/// Twisted Kähler identities and the Laplacian relations of a Kähler
/// metric. NotKahler if dω ≠ 0.
KahlerRecord kahlerIdentities(const TwistedComplex& tc, const Metric& metric);

/// As above; throws KahlerIdentityViolation on failure.
KahlerRecord requireKahlerIdentities(const TwistedComplex& tc,
                                     const Metric& metric);

}  // namespace twisted_hodge
