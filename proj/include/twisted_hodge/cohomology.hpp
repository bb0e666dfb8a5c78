#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twisted_hodge/subspace.hpp"
#include "twisted_hodge/twisted_complex.hpp"

namespace twisted_hodge {

enum class Theory { DeRham, Del, Delbar, BottChern, Aeppli };

inline constexpr std::array<Theory, 5> kTheories = {
    Theory::DeRham, Theory::Del, Theory::Delbar, Theory::BottChern,
    Theory::Aeppli};

/// "dR", "del", "delbar", "BC", "A"
const char* theoryKey(Theory t);

/// Cycles and boundaries of one theory in one degree.
struct CohomologyData {
  Subspace cycles;
  Subspace boundaries;

  Index dim() const { return cycles.dim() - boundaries.dim(); }
};

/// Z/B for all five theories and all degrees:
///   dR:     ker d_φ / im d_φ
///   ∂, ∂̄:   ker / im of the twisted operator
///   BC:     (ker ∂_tw ∩ ker ∂̄_tw) / im ∂_tw∂̄_tw
///   A:      ker ∂_tw∂̄_tw / (im ∂_tw + im ∂̄_tw)
/// Images into degree k come from the degree k−1 (k−2 for ∂∂̄) blocks.
class TwistedCohomology {
 public:
  explicit TwistedCohomology(const TwistedComplex& tc);

  const TwistedComplex& complex() const { return tc_; }
  int topDegree() const { return static_cast<int>(data_[0].size()) - 1; }
  const CohomologyData& data(Theory t, int k) const {
    return data_[static_cast<int>(t)].at(k);
  }
  std::vector<long> dims(Theory t) const;
  const GradedOperator& delDelbar() const { return delDelbar_; }

 private:
  TwistedComplex tc_;
  GradedOperator delDelbar_;
  std::array<std::vector<CohomologyData>, 5> data_;
};

/// The seven identity-induced maps, in report order.
enum class NaturalMap { BcDel, BcDr, BcDelbar, BcA, DelA, DrA, DelbarA };

inline constexpr std::array<NaturalMap, 7> kNaturalMaps = {
    NaturalMap::BcDel, NaturalMap::BcDr, NaturalMap::BcDelbar, NaturalMap::BcA,
    NaturalMap::DelA, NaturalMap::DrA, NaturalMap::DelbarA};

/// "BC->del", ...
const char* mapKey(NaturalMap m);
Theory mapSource(NaturalMap m);
Theory mapTarget(NaturalMap m);

struct MapRecord {
  NaturalMap map = NaturalMap::BcA;
  std::vector<QuotientMapVerdict> perDegree;

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  std::vector<int> failingDegrees(bool needInjective, bool needSurjective) const;
  friend bool operator==(const MapRecord&, const MapRecord&) = default;
};

std::vector<MapRecord> naturalMaps(const TwistedCohomology& h);

/// The four equivalent conditions and the two implications.
struct LemmaCrossCheck {
  bool bcToAInjective = false;
  bool bcToABijective = false;
  bool bcToDelAndDelbarInjective = false;
  bool delAndDelbarToASurjective = false;
  bool bcToDrInjective = false;
  bool drToASurjective = false;

  bool consistent() const;
  friend bool operator==(const LemmaCrossCheck&, const LemmaCrossCheck&) = default;
};

struct LemmaVerdict {
  bool holds = false;
  std::vector<int> failingDegrees;
  LemmaCrossCheck crossCheck;
};

/// Lemma = ι_{BC,A} injective in every degree. Throws EquivalenceViolation
/// if the cross-check is inconsistent.
LemmaVerdict lemmaVerdict(const std::vector<MapRecord>& maps);

struct HodgeVerdict {
  bool holds = false;
  std::vector<int> failingDegrees;
};

/// ι_{BC,∂}, ι_{BC,dR}, ι_{BC,∂̄} bijective in every degree.
HodgeVerdict hodgeDecompositionVerdict(const std::vector<MapRecord>& maps,
                                       const LemmaVerdict& lemma);

struct InequalityRecord {
  int degree = 0;
  std::string relation;  // e.g. "BC+A>=del+delbar"
  long lhs = 0;
  long rhs = 0;
  bool holds = true;
  /// Asserted inequalities are theorems; unasserted ones are only recorded.
  bool asserted = true;
  friend bool operator==(const InequalityRecord&, const InequalityRecord&) = default;
};

/// Throws InequalityViolation if an asserted inequality fails.
std::vector<InequalityRecord> frolicherAudit(
    const std::map<Theory, std::vector<long>>& dims, bool theta1IsZero);

/// Per-bidegree dims of ∂, ∂̄, BC, A; only meaningful when θ₁ = 0.
/// table[theory][p][q].
using BigradedTable = std::map<Theory, std::vector<std::vector<long>>>;
BigradedTable bigradedDims(const TwistedCohomology& h);

struct Witness {
  int degree = 0;
  Form form;
  std::optional<Form> primitive;
  /// "delbar_tw" or "del_tw" when a primitive exists.
  std::string primitiveOperator;
  bool delClosed = false;
  bool delbarClosed = false;
  bool exact = false;
  bool notDelDelbarExact = false;
};

/// A class in (ker ∂_tw ∩ ker ∂̄_tw) ∩ (im ∂_tw + im ∂̄_tw) outside
/// im ∂_tw∂̄_tw. Candidates are tried in the order: ∂̄_tw and ∂_tw images of
/// the hint, then of each degree k−1 monomial, then the canonical basis of
/// the intersection. Throws NoWitness if ι_{BC,A} is injective at `degree`
/// (or everywhere, when degree is omitted).
Witness extractWitness(const TwistedCohomology& h,
                       std::optional<int> degree = std::nullopt,
                       const std::optional<Form>& primitiveHint = std::nullopt);

/// Recomputes the four facts about a witness from scratch.
Witness verifyWitness(const TwistedComplex& tc, const Form& w,
                      const std::optional<Form>& primitive);

}  // namespace twisted_hodge
