#include <doctest.h>

#include "helpers.hpp"

using namespace twisted_hodge;
using testing::form;

namespace {

ErrorKind kindOf(const LieComplexSpec& spec) {
  try {
    buildInvariantComplex(spec);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST_CASE("tori are abelian") {
  for (const char* key : {"torus1", "torus2", "torus3"}) {
    auto c = testing::model(key);
    CHECK(c->del.isZero());
    CHECK(c->delbar.isZero());
    CHECK(c->d.isZero());
  }
}

TEST_CASE("Nakamura structure equations split by bidegree") {
  // From the coframe (dz₁, e^{−(z₁+z̄₁)/2} dz₂, e^{(z₁+z̄₁)/2} dz₃):
  // d(e^{−x}dz₂) = −½(dz₁+dz̄₁)∧μ², d(e^{x}dz₃) = ½(dz₁+dz̄₁)∧μ³.
  auto c = testing::model("nakamura");
  const FormBasis& b = c->basis;
  auto del = [&](const char* x) { return formatForm(applyToForm(c->del, b, form(*c, x)), b); };
  auto delbar = [&](const char* x) {
    return formatForm(applyToForm(c->delbar, b, form(*c, x)), b);
  };
  CHECK(del("mu1") == "0");
  CHECK(delbar("mu1") == "0");
  CHECK(del("mu2") == "-1/2*mu1^mu2");
  CHECK(delbar("mu2") == "1/2*mu2^mubar1");
  CHECK(del("mu3") == "1/2*mu1^mu3");
  CHECK(delbar("mu3") == "-1/2*mu3^mubar1");
  CHECK(formatForm(applyToForm(c->d, b, form(*c, "mubar3")), b) ==
        "1/2*mu1^mubar3 + 1/2*mubar1^mubar3");
  CHECK((c->d * c->d).isZero());
}

TEST_CASE("Iwasawa") {
  auto c = testing::model("iwasawa");
  CHECK(formatForm(applyToForm(c->d, c->basis, form(*c, "mu3")), c->basis) == "-mu1^mu2");
  for (const char* g : {"mu1", "mu2", "mu3"}) {
    CHECK(applyToForm(c->delbar, c->basis, form(*c, g)).isZero());
  }
  CHECK(formatForm(applyToForm(c->delbar, c->basis, form(*c, "mubar3")), c->basis) ==
        "-mubar1^mubar2");
}

TEST_CASE("derivation and conjugation identities") {
  for (const auto& key : catalogKeys()) {
    auto c = testing::model(key);
    CHECK(c->d == c->del + c->delbar);
    CHECK((c->del * c->del).isZero());
    CHECK((c->delbar * c->delbar).isZero());
    CHECK((c->del * c->delbar + c->delbar * c->del).isZero());
    CHECK(shiftsBidegree(c->del, c->basis, 1, 0));
    CHECK(shiftsBidegree(c->delbar, c->basis, 0, 1));
    CHECK(c->conjugation * c->conjugation == GradedOperator::identity(c->dims()));
    CHECK(c->conjugation * c->del == c->delbar * c->conjugation);
  }
}

TEST_CASE("spec validation errors") {
  LieComplexSpec spec;
  spec.n = 2;
  spec.d = {{1, {{GaussianRational(1), TermKind::Antiholomorphic, 1, 2}}}};
  CHECK(kindOf(spec) == ErrorKind::NotIntegrable);

  spec.d = {{2, {{GaussianRational(1), TermKind::Mixed, 1, 1}}},
            {1, {{GaussianRational(1), TermKind::Holomorphic, 1, 2}}}};
  CHECK(kindOf(spec) == ErrorKind::NotALieAlgebra);

  spec.d = {{3, {{GaussianRational(1), TermKind::Holomorphic, 1, 2}}}};
  CHECK(kindOf(spec) == ErrorKind::ParseError);

  spec.d = {{1, {{GaussianRational(1), TermKind::Holomorphic, 2, 2}}}};
  CHECK(kindOf(spec) == ErrorKind::ParseError);

  spec.d.clear();
  spec.n = 6;
  CHECK(kindOf(spec) == ErrorKind::SizeGuard);
  CHECK(buildInvariantComplex(spec, true)->n() == 6);
  spec.n = 0;
  CHECK(kindOf(spec) == ErrorKind::SizeGuard);
}

TEST_CASE("NotALieAlgebra names the generator and residual") {
  LieComplexSpec spec;
  spec.n = 2;
  spec.d = {{2, {{GaussianRational(1), TermKind::Mixed, 1, 1}}},
            {1, {{GaussianRational(1), TermKind::Holomorphic, 1, 2}}}};
  try {
    buildInvariantComplex(spec);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("mu") != std::string::npos);
    CHECK(std::string(e.what()).find("Jacobi") != std::string::npos);
  }
}

TEST_CASE("spec documents round trip") {
  for (const auto& key : catalogKeys()) {
    const LieComplexSpec spec = builtinModel(key).spec;
    const LieComplexSpec back = parseSpecText(specToJson(spec).dump());
    CHECK(specToJson(back) == specToJson(spec));
    CHECK(buildInvariantComplex(back)->d == testing::model(key)->d);
  }
  const LieComplexSpec parsed = parseSpecText(R"({
    "name": "nak", "n": 3,
    "d": [ {"target": 2, "terms": [ {"coeff": "-1/2", "kind": "holo", "i": 1, "j": 2},
                                    {"coeff": "1/2", "kind": "mixed", "i": 2, "j": 1} ]},
           {"target": 3, "terms": [ {"coeff": " 1/2 ", "kind": "holo", "i": 1, "j": 3},
                                    {"coeff": "-1/2+0i", "kind": "mixed", "i": 3, "j": 1} ]} ],
    "metric": [["1","0","0"],["0","2","0"],["0","0","1"]] })");
  CHECK(buildInvariantComplex(parsed)->d == testing::model("nakamura")->d);
  REQUIRE(parsed.metric.has_value());
  CHECK((*parsed.metric)(1, 1) == GaussianRational(2));
  CHECK_THROWS_AS(parseSpecText("{ not json"), Error);
  CHECK_THROWS_AS(parseSpecText(R"({"n": 1, "d": [{"target": 1, "terms": [{"coeff": "x", "kind": "holo", "i": 1, "j": 1}]}]})"),
                  Error);
}

TEST_CASE("catalog") {
  CHECK(catalogKeys().size() == 5);
  for (const auto& key : catalogKeys()) CHECK_NOTHROW(testing::model(key));
  try {
    builtinModel("klein");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownModel);
  }
  const NakamuraScenario s = nakamuraScenario();
  CHECK(specToJson(s.entry.spec) == specToJson(builtinModel("nakamura").spec));
  CHECK(s.witnessDegree == 2);
}
