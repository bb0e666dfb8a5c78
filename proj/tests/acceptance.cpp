// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracle.hpp"
#include "twisted_hodge/catalog.hpp"
#include "twisted_hodge/errors.hpp"
#include "twisted_hodge/hodge.hpp"
#include "twisted_hodge/suites.hpp"

using namespace twisted_hodge;

namespace {

struct Run {
  std::string key;
  std::string theta1;
  std::string theta2;
  TwistedComplex tc;
};

Matrix gramOf(std::initializer_list<std::initializer_list<const char*>> rows) {
  Matrix g(static_cast<Index>(rows.size()), static_cast<Index>(rows.size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const char* e : row) g(i, j++) = parseGaussianRational(e);
    ++i;
  }
  return g;
}

/// The identity and one non-identity Hermitian Gram matrix.
std::vector<Matrix> metricsFor(int n) {
  std::vector<Matrix> out = {identityMatrix(n)};
  if (n == 1) out.push_back(gramOf({{"2"}}));
  if (n == 2) out.push_back(gramOf({{"2", "i"}, {"-i", "1"}}));
  if (n == 3) out.push_back(gramOf({{"2", "1/2+i", "0"}, {"1/2-i", "3", "i"}, {"0", "-i", "1"}}));
  return out;
}

std::vector<Run> catalogRuns(const std::vector<std::string>& keys) {
  std::vector<Run> out;
  for (const auto& key : keys) {
    const CatalogEntry entry = builtinModel(key);
    auto base = buildInvariantComplex(entry.spec);
    for (const auto& [t1, t2] : entry.twists) {
      out.push_back({key, t1, t2,
                     twistedComplex(base, parseTwist(t1, base->basis), parseTwist(t2, base->basis))});
    }
  }
  return out;
}

std::string label(const Run& r) { return r.key + " (" + r.theta1 + ", " + r.theta2 + ")"; }

std::map<Theory, std::vector<long>> dimsOf(const TwistedCohomology& h) {
  std::map<Theory, std::vector<long>> out;
  for (Theory t : kTheories) out[t] = h.dims(t);
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void report(const std::string& id, const std::string& title,
            const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o.pass = false;
    o.detail = std::string(errorKindName(e.kind())) + ": " + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << title;
  if (!o.detail.empty()) line << "  [" << o.detail << "]";
  line.precision(2);
  line << std::fixed << "  (" << secs << "s)";
  std::cout << line.str() << std::endl;
}

Outcome criterion1() {
  Outcome o;
  const NakamuraScenario s = nakamuraScenario();
  auto base = buildInvariantComplex(s.entry.spec);
  const FormBasis& b = base->basis;
  const TwistedComplex tc =
      twistedComplex(base, parseTwist(s.theta1, b), parseTwist(s.theta2, b));
  const TwistedCohomology h(tc);
  o.require(h.dims(Theory::Delbar) == std::vector<long>(7, 0), "h_delbar not identically 0");
  const auto maps = naturalMaps(h);
  const LemmaVerdict lemma = lemmaVerdict(maps);
  o.require(!lemma.holds, "lemma holds");
  o.require(!lemma.failingDegrees.empty() && lemma.failingDegrees.front() == 2,
            "first failing degree is not 2");
  const Witness w = extractWitness(h, 2, parseForm(s.primitive, b));
  const Form expected = parseForm(s.witness, b);
  o.require(w.form == expected, "witness differs from 1/2(mu1+mubar1)^mubar3");
  o.require(applyToForm(tc.delTw, b, w.form).isZero(), "del_tw w != 0");
  o.require(applyToForm(tc.delbarTw, b, w.form).isZero(), "delbar_tw w != 0");
  o.require(applyToForm(tc.delbarTw, b, parseForm("mubar3", b)) == w.form,
            "w != delbar_tw(mubar3)");
  const GradedOperator dd = tc.delTw * tc.delbarTw;
  o.require(!image(dd.block(0)).contains(w.form.coordinates(b, 2)),
            "w is del_tw delbar_tw-exact");
  o.require(!hodgeDecompositionVerdict(maps, lemma).holds, "Hodge decomposition holds");
  o.detail = o.pass ? "witness " + formatForm(w.form, b) + " = delbar_tw(mubar3)" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  int count = 0;
  for (const Run& r : catalogRuns({"torus1", "torus2", "torus3"})) {
    const TwistedCohomology h(r.tc);
    const auto maps = naturalMaps(h);
    const LemmaVerdict lemma = lemmaVerdict(maps);
    o.require(lemma.holds, label(r) + ": lemma fails");
    o.require(hodgeDecompositionVerdict(maps, lemma).holds, label(r) + ": no Hodge decomposition");
    for (Theory t : kTheories) {
      o.require(h.dims(t) == h.dims(Theory::DeRham), label(r) + ": dims differ");
    }
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " torus/twist pairs";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int count = 0;
  for (const Run& r : catalogRuns({"torus1", "torus2", "torus3"})) {
    for (const Matrix& g : metricsFor(r.tc.n())) {
      const KahlerRecord k = kahlerIdentities(r.tc, buildMetric(*r.tc.base, g));
      for (const auto& [name, ok] : k.checks) o.require(ok, label(r) + ": " + name);
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " model/twist/metric combinations";
  return o;
}

Outcome criterion4() {
  Outcome o;
  int count = 0;
  for (const Run& r : catalogRuns(catalogKeys())) {
    const TwistedCohomology h(r.tc);
    frolicherAudit(dimsOf(h), r.tc.twist.theta1.isZero());
    ++count;
  }
  o.detail = std::to_string(count) + " model/twist pairs";
  return o;
}

/// Star duality against the dual twist produced by `dual`; checks the
/// BC/A and dR dims and the operator intertwining ∗̄Δ_BC = Δ_A'∗̄.
Outcome duality(const std::function<std::pair<Form, Form>(const TwistPair&)>& dual) {
  Outcome o;
  int count = 0;
  const GaussianRational minus(-1);
  for (const Run& r : catalogRuns(catalogKeys())) {
    const auto [d1, d2] = dual(r.tc.twist);
    const TwistedComplex other = withTwist(r.tc, d1, d2);
    const TwistedComplex negPhi =
        withTwist(r.tc, minus * r.tc.twist.theta1, minus * r.tc.twist.theta2);
    const TwistedCohomology h(r.tc), hOther(other), hNeg(negPhi);
    const int top = h.topDegree();
    for (int k = 0; k <= top; ++k) {
      o.require(h.dims(Theory::BottChern)[k] == hOther.dims(Theory::Aeppli)[top - k],
                label(r) + ": h_BC(" + std::to_string(k) + ") != h_A'(" +
                    std::to_string(top - k) + ")");
      o.require(h.dims(Theory::DeRham)[k] == hNeg.dims(Theory::DeRham)[top - k],
                label(r) + ": h_dR(k; phi) != h_dR(2n-k; -phi)");
    }
    for (const Matrix& g : metricsFor(r.tc.n())) {
      const Metric m = buildMetric(*r.tc.base, g);
      const GradedOperator star = hodgeStar(*r.tc.base, m);
      const Laplacians lap = laplacians(r.tc, gramAdjoints(r.tc, m));
      const Laplacians lapOther = laplacians(other, gramAdjoints(other, m));
      o.require(star * lap.bc == lapOther.a * star,
                label(r) + ": star Delta_BC != Delta_A' star");
    }
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " model/twist pairs, 2 metrics each";
  return o;
}

Outcome criterion5Literal() {
  const GaussianRational minus(-1);
  return duality([&](const TwistPair& t) {
    return std::pair{minus * t.theta2, minus * t.theta1};
  });
}

Outcome criterion5Corrected() {
  const GaussianRational minus(-1);
  return duality([&](const TwistPair& t) {
    return std::pair{minus * t.theta1, minus * t.theta2};
  });
}

Outcome criterion6() {
  Outcome o;
  int count = 0;
  for (const Run& r : catalogRuns(catalogKeys())) {
    const TwistedCohomology h(r.tc);
    std::vector<HarmonicDims> seen;
    for (const Matrix& g : metricsFor(r.tc.n())) {
      seen.push_back(harmonicDims(h, buildMetric(*r.tc.base, g)));
      ++count;
    }
    o.require(seen.front() == seen.back(), label(r) + ": harmonic dims depend on the metric");
  }
  if (o.pass) o.detail = std::to_string(count) + " model/twist/metric combinations";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int checks = 0;
  for (const Run& r : catalogRuns(catalogKeys())) {
    for (const Matrix& g : metricsFor(r.tc.n())) {
      for (const CheckResult& c : runSuite(Suite::Operators, r.tc, buildMetric(*r.tc.base, g))) {
        if (c.informational) continue;
        o.require(c.pass, label(r) + ": " + c.name);
        ++checks;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " exact checks";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int count = 0;
  auto toC = [](const GaussianRational& x) {
    return oracle::C{oracle::Q(x.real().get_str()), oracle::Q(x.imag().get_str())};
  };
  auto compare = [&](const TwistedComplex& tc, const GaussianRational& c, const std::string& what) {
    const Monomial mu = tc.basis().holomorphic(1);
    const auto expected = oracle::n1Dims(oracle::n1Operators(
        toC(c), toC(tc.twist.theta1.coefficient(mu)), toC(tc.twist.theta2.coefficient(mu))));
    const TwistedCohomology h(tc);
    int idx = 0;
    for (Theory t : kTheories) {
      const auto d = h.dims(t);
      for (int k = 0; k <= 2; ++k) {
        o.require(d[k] == expected[idx][k], what + ": " + theoryKey(t) + " differs from oracle");
      }
      ++idx;
    }
    ++count;
  };
  for (const Run& r : catalogRuns({"torus1"})) compare(r.tc, GaussianRational(0), label(r));
  for (const char* text : {"1", "-1/2", "i", "2-3i"}) {
    LieComplexSpec spec;
    spec.name = "affine";
    spec.n = 1;
    const GaussianRational c = parseGaussianRational(text);
    spec.d = {{1, {{c, TermKind::Mixed, 1, 1}}}};
    auto base = buildInvariantComplex(spec);
    compare(twistedComplex(base, Form(), Form()), c, std::string("affine c=") + text);
  }
  auto torus = buildInvariantComplex(builtinModel("torus1").spec);
  const TwistedCohomology zero(
      twistedComplex(torus, parseTwist("mu1", torus->basis), Form()));
  for (Theory t : kTheories) {
    o.require(zero.dims(t) == std::vector<long>{0, 0, 0}, "torus1 (mu1, 0) not acyclic");
  }
  if (o.pass) o.detail = std::to_string(count) + " n=1 runs against the dense oracle";
  return o;
}

Outcome criterion9() {
  Outcome o;
  int count = 0;
  for (const Run& r : catalogRuns(catalogKeys())) {
    const TwistedCohomology h(r.tc);
    const LemmaVerdict v = lemmaVerdict(naturalMaps(h));
    const LemmaCrossCheck& c = v.crossCheck;
    const bool same = c.bcToAInjective == c.bcToABijective &&
                      c.bcToAInjective == c.bcToDelAndDelbarInjective &&
                      c.bcToAInjective == c.delAndDelbarToASurjective;
    o.require(same, label(r) + ": equivalent conditions disagree");
    if (v.holds) {
      o.require(c.bcToDrInjective && c.drToASurjective, label(r) + ": implication fails");
    }
    ++count;
  }
  if (o.pass) o.detail = std::to_string(count) + " model/twist pairs";
  return o;
}

}  // namespace

int main() {
  report("1", "Nakamura example reproduced exactly", criterion1);
  report("2", "Kaehler tori: lemma, Hodge decomposition, equal dims", criterion2);
  report("3", "Kaehler Laplacian identities", criterion3);
  report("4", "Frolicher-type inequalities", criterion4);
  report("5", "star duality against (-theta2, -theta1) as stated", criterion5Literal);
  report("5'", "star duality against (-theta1, -theta2)", criterion5Corrected);
  report("6", "harmonic dims equal cohomology dims, metric independent", criterion6);
  report("7", "operator identity suite", criterion7);
  report("8", "n = 1 dims equal the dense oracle", criterion8);
  report("9", "ddbar-lemma equivalences and implications", criterion9);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
