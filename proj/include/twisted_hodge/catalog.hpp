#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twisted_hodge/lie_complex.hpp"

namespace twisted_hodge {

struct CatalogEntry {
  std::string key;
  LieComplexSpec spec;
  std::string note;
  /// Twist pairs (θ₁, θ₂) worth looking at, in twist grammar.
  std::vector<std::pair<std::string, std::string>> twists;
};

/// torus1, torus2, torus3, nakamura, iwasawa
const std::vector<std::string>& catalogKeys();

/// Throws UnknownModel for any other key.
CatalogEntry builtinModel(std::string_view key);

/// The Nakamura example: twist (½μ¹, 0), ∂̄_tw-cohomology zero in every
/// degree, lemma and Hodge decomposition both failing in degree 2, with the
/// witness ∂̄_tw(μ̄³) = ½(μ¹+μ̄¹)∧μ̄³.
struct NakamuraScenario {
  CatalogEntry entry;
  std::string theta1;
  std::string theta2;
  int witnessDegree = 2;
  std::string witness;
  std::string primitive;
  bool lemmaHolds = false;
  bool hodgeHolds = false;
};

NakamuraScenario nakamuraScenario();

/// Primitive hint for the witness search on a catalog model, if any.
std::string witnessHint(std::string_view key);

}  // namespace twisted_hodge
