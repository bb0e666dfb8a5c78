#include "twisted_hodge/catalog.hpp"

#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

namespace {

GaussianRational q(long num, long den = 1) { return GaussianRational(mpq_class(num, den)); }

StructureTerm holo(GaussianRational c, int i, int j) {
  return {std::move(c), TermKind::Holomorphic, i, j};
}

StructureTerm mixed(GaussianRational c, int i, int j) {
  return {std::move(c), TermKind::Mixed, i, j};
}

CatalogEntry torus(int n) {
  CatalogEntry e;
  e.key = "torus" + std::to_string(n);
  e.spec.name = "complex torus of dimension " + std::to_string(n);
  e.spec.n = n;
  e.note = "abelian, Kaehler with the identity metric";
  e.twists = {{"0", "0"}, {"mu1", "0"}, {"0", "mu1"}, {"i*mu1", "0"},
              {"(1/2+1/3i)*mu1", "-mu1"}};
  if (n >= 2) e.twists.push_back({"mu1+1/2i*mu2", "mu2"});
  if (n >= 3) e.twists.push_back({"mu1+i*mu2", "mu3"});
  return e;
}

CatalogEntry nakamura() {
  CatalogEntry e;
  e.key = "nakamura";
  e.spec.name = "completely-solvable Nakamura manifold";
  e.spec.n = 3;
  // dμ² = −½(μ¹+μ̄¹)∧μ², dμ³ = ½(μ¹+μ̄¹)∧μ³
  e.spec.d = {{2, {holo(q(-1, 2), 1, 2), mixed(q(1, 2), 2, 1)}},
              {3, {holo(q(1, 2), 1, 3), mixed(q(-1, 2), 3, 1)}}};
  e.note = "invariant complex of the Nakamura solvmanifold; lattice data omitted";
  e.twists = {{"0", "0"}, {"1/2*mu1", "0"}, {"0", "-1/2*mu1"}, {"mu1", "0"},
              {"0", "1/2*mu1"}, {"1/2i*mu1", "0"}};
  return e;
}

CatalogEntry iwasawa() {
  CatalogEntry e;
  e.key = "iwasawa";
  e.spec.name = "Iwasawa manifold";
  e.spec.n = 3;
  e.spec.d = {{3, {holo(q(-1), 1, 2)}}};
  e.note = "control model, not from the example set; the untwisted lemma fails";
  e.twists = {{"0", "0"}, {"mu1", "0"}, {"0", "mu2"}};
  return e;
}

}  // namespace

const std::vector<std::string>& catalogKeys() {
  static const std::vector<std::string> keys = {"torus1", "torus2", "torus3",
                                                "nakamura", "iwasawa"};
  return keys;
}

CatalogEntry builtinModel(std::string_view key) {
  if (key == "torus1") return torus(1);
  if (key == "torus2") return torus(2);
  if (key == "torus3") return torus(3);
  if (key == "nakamura") return nakamura();
  if (key == "iwasawa") return iwasawa();
  fail(ErrorKind::UnknownModel, "unknown model '" + std::string(key) + "'");
}

NakamuraScenario nakamuraScenario() {
  NakamuraScenario s;
  s.entry = nakamura();
  s.theta1 = "1/2*mu1";
  s.theta2 = "0";
  s.witness = "1/2*mu1^mubar3 + 1/2*mubar1^mubar3";
  s.primitive = "mubar3";
  return s;
}

std::string witnessHint(std::string_view key) {
  return key == "nakamura" ? "mubar3" : "";
}

}  // namespace twisted_hodge
