#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twisted_hodge/forms.hpp"
#include "twisted_hodge/graded_operator.hpp"

namespace twisted_hodge {

enum class TermKind { Holomorphic, Mixed, Antiholomorphic };

/// One term c·μⁱ∧μʲ (holo), c·μⁱ∧μ̄ʲ (mixed) or c·μ̄ⁱ∧μ̄ʲ (anti); indices
/// are 1-based.
struct StructureTerm {
  GaussianRational coeff;
  TermKind kind = TermKind::Holomorphic;
  int i = 1;
  int j = 1;
};

/// dμ^target = Σ terms.
struct StructureEquation {
  int target = 1;
  std::vector<StructureTerm> terms;
};

/// Structure constants of d on the (1,0) coframe μ¹..μⁿ, as read from a
/// model document. Generators with no equation are closed.
struct LieComplexSpec {
  std::string name;
  int n = 0;
  std::vector<StructureEquation> d;
  /// Optional Hermitian Gram matrix on μ¹..μⁿ.
  std::optional<Matrix> metric;
};

LieComplexSpec parseSpecDocument(const nlohmann::json& doc);
LieComplexSpec parseSpecText(std::string_view text);
nlohmann::json specToJson(const LieComplexSpec& spec);

/// n×n array of coefficient strings.
Matrix parseGramJson(const nlohmann::json& rows, int n);
nlohmann::json gramToJson(const Matrix& gram);

/// The exterior complex ∧^{•,•}𝔤*_ℂ with its untwisted operators.
struct InvariantComplex {
  LieComplexSpec spec;
  FormBasis basis;
  /// d of each generator, indexed by bit position (μ¹..μⁿ, μ̄¹..μ̄ⁿ).
  std::vector<Form> generatorDifferentials;
  GradedOperator del;
  GradedOperator delbar;
  GradedOperator d;
  /// x ↦ x̄, antilinear, degree-preserving.
  GradedOperator conjugation;

  int n() const { return basis.n(); }
  const std::vector<Index>& dims() const { return del.dims(); }
};

inline constexpr int kDefaultMaxDimension = 5;

/// Validates a spec and assembles ∂, ∂̄, d and conjugation.
///
/// Throws SizeGuard (n outside 1..5 unless allowLarge), ParseError (bad
/// indices), NotIntegrable (a nonzero (0,2) term) or NotALieAlgebra (d² ≠ 0
/// on some generator; the message names the generator and residual).
std::shared_ptr<const InvariantComplex> buildInvariantComplex(
    const LieComplexSpec& spec, bool allowLarge = false);

/// Extends images of the 2n generators to a degree +1 derivation of the
/// exterior algebra: D(g₀∧…∧g_k) = Σ (−1)^a g₀∧…∧D(g_a)∧…∧g_k.
GradedOperator derivation(const FormBasis& basis,
                          const std::vector<Form>& generatorImages);

/// x ↦ α∧x for a homogeneous form α.
GradedOperator leftMultiplication(const FormBasis& basis, const Form& alpha);

/// Matrix of a linear operator applied to a form, returned as a form.
Form applyToForm(const GradedOperator& op, const FormBasis& basis,
                 const Form& x);

/// True when op sends bidegree (p,q) into (p+dp, q+dq) on every block.
bool shiftsBidegree(const GradedOperator& op, const FormBasis& basis, int dp,
                    int dq);

}  // namespace twisted_hodge
