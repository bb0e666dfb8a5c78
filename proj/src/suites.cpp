#include "twisted_hodge/suites.hpp"

#include "twisted_hodge/elimination.hpp"
#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

const char* suiteKey(Suite s) {
  switch (s) {
    case Suite::Operators: return "operators";
    case Suite::Hodge: return "hodge";
    case Suite::Kahler: return "kahler";
    case Suite::Duality: return "duality";
    case Suite::Frolicher: return "frolicher";
  }
  return "";
}

Suite parseSuite(std::string_view name) {
  for (Suite s : kSuites) {
    if (name == suiteKey(s)) return s;
  }
  fail(ErrorKind::ParseError, "unknown suite '" + std::string(name) + "'");
}

bool allPass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.informational && !c.pass) return false;
  }
  return true;
}

namespace {

/// ⟨L e_a, e_b⟩ = ⟨e_a, Λ e_b⟩ for all basis pairs in adjacent degrees.
bool lambdaPairing(const GradedOperator& l, const GradedOperator& lam,
                   const Metric& metric) {
  for (int k = 0; k <= l.topDegree(); ++k) {
    const int t = l.targetDegree(k);
    if (t < 0) continue;
    for (Index a = 0; a < l.dims()[k]; ++a) {
      const Vector ea = unitVector(l.dims()[k], a);
      const Vector lea = l.apply(k, ea);
      for (Index b = 0; b < l.dims()[t]; ++b) {
        const Vector eb = unitVector(l.dims()[t], b);
        if (innerProduct(metric, t, lea, eb) !=
            innerProduct(metric, k, ea, lam.apply(t, eb))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool starSquare(const GradedOperator& star) {
  const GradedOperator sq = star * star;
  for (int k = 0; k <= sq.topDegree(); ++k) {
    Matrix expected = identityMatrix(sq.dims()[k]);
    if (k % 2 != 0) expected = -expected;
    if (!exactlyEqual(sq.block(k), expected)) return false;
  }
  return true;
}

/// ⟨∗̄x, ∗̄y⟩ = ⟨y, x⟩, i.e. Sᴴ M_{2n−k} S = M_kᵀ.
bool starIsometry(const GradedOperator& star, const Metric& metric) {
  for (int k = 0; k <= star.topDegree(); ++k) {
    const Matrix& s = star.block(k);
    const Matrix sh = s.adjoint();
    const Matrix lhs = multiply(multiply(sh, metric.innerProduct[star.targetDegree(k)]), s);
    if (!exactlyEqual(lhs, metric.innerProduct[k].transpose())) return false;
  }
  return true;
}

std::vector<CheckResult> operatorSuite(const TwistedComplex& tc, const Metric& metric) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back({Suite::Operators, std::move(name), pass, false, std::move(detail)});
  };
  add("del_tw^2 = 0", (tc.delTw * tc.delTw).isZero());
  add("delbar_tw^2 = 0", (tc.delbarTw * tc.delbarTw).isZero());
  add("del_tw delbar_tw + delbar_tw del_tw = 0",
      (tc.delTw * tc.delbarTw + tc.delbarTw * tc.delTw).isZero());
  add("d_phi = del_tw + delbar_tw", tc.delTw + tc.delbarTw == tc.dPhi);
  add("d_phi^2 = 0", (tc.dPhi * tc.dPhi).isZero());
  const auto leibniz = leibnizCheck(tc);
  add("Leibniz rule on every monomial", !leibniz,
      leibniz ? leibniz->which + " fails on " + tc.basis().name(leibniz->alpha) : "");
  add("conj del_tw = delbar_(theta1,-theta2) conj", conjugationSymmetry(tc));
  if (tc.twist.theta1.isZero()) {
    add("del_tw and delbar_tw have bidegrees (1,0) and (0,1)", isDoubleComplex(tc));
  }

  const GradedOperator star = hodgeStar(*tc.base, metric);
  add("star star = (-1)^k", starSquare(star));
  add("<star x, star y> = <y, x>", starIsometry(star, metric));

  const bool unimodular = isUnimodular(*tc.base);
  if (unimodular) {
    bool agree = true;
    std::string detail;
    try {
      checkedAdjoints(tc, metric);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AdjointMismatch) throw;
      agree = false;
      detail = e.what();
    }
    add("Gram and star adjoints agree", agree, detail);
    const Adjoints viaStar = starAdjoints(tc, metric);
    add("(L_phi x, y) = (x, Lambda_phi y) on basis pairs",
        lambdaPairing(tc.lPhi, viaStar.lambdaPhi, metric));
  } else {
    out.push_back({Suite::Operators, "Gram and star adjoints agree", true, true,
                   "skipped: the model is not unimodular"});
    add("(L_phi x, y) = (x, Lambda_phi y) on basis pairs",
        lambdaPairing(tc.lPhi, gramAdjoints(tc, metric).lambdaPhi, metric));
  }
  return out;
}

std::vector<CheckResult> hodgeSuite(const TwistedComplex& tc, const Metric& metric) {
  std::vector<CheckResult> out;
  const TwistedCohomology h(tc);
  const Laplacians lap = laplacians(tc, gramAdjoints(tc, metric));
  for (Theory t : kTheories) {
    const std::string key = theoryKey(t);
    const GradedOperator& delta = lap.of(t);
    out.push_back({Suite::Hodge, "Delta_" + key + " self-adjoint",
                   isSelfAdjoint(delta, metric), false, {}});
    out.push_back({Suite::Hodge, "Delta_" + key + " positive semidefinite",
                   isPositiveSemidefinite(delta, metric), false, {}});
    out.push_back({Suite::Hodge, "dim ker Delta_" + key + " = h_" + key,
                   kernelDims(delta) == h.dims(t), false, {}});
  }
  return out;
}

std::vector<CheckResult> kahlerSuite(const TwistedComplex& tc, const Metric& metric) {
  std::vector<CheckResult> out;
  for (const auto& [name, ok] : kahlerIdentities(tc, metric).checks) {
    out.push_back({Suite::Kahler, name, ok, false, {}});
  }
  const TwistedCohomology h(tc);
  const std::vector<MapRecord> maps = naturalMaps(h);
  const LemmaVerdict lemma = lemmaVerdict(maps);
  out.push_back({Suite::Kahler, "ddbar-lemma holds", lemma.holds, false, {}});
  out.push_back({Suite::Kahler, "Hodge decomposition holds",
                 hodgeDecompositionVerdict(maps, lemma).holds, false, {}});
  bool equal = true;
  for (Theory t : kTheories) equal = equal && h.dims(t) == h.dims(Theory::DeRham);
  out.push_back({Suite::Kahler, "h_dR = h_del = h_delbar = h_BC = h_A", equal, false, {}});
  return out;
}

std::vector<CheckResult> dualitySuite(const TwistedComplex& tc, const Metric& metric) {
  const GaussianRational minus(-1);
  const DualityRecord r =
      starDuality(tc, metric, minus * tc.twist.theta1, minus * tc.twist.theta2);
  std::vector<CheckResult> out;
  for (const auto& group : {r.operatorChecks, r.dimensionChecks}) {
    for (const auto& [name, ok] : group) {
      out.push_back({Suite::Duality, name + " against (-theta1,-theta2)", ok, false, {}});
    }
  }
  return out;
}

std::vector<CheckResult> frolicherSuite(const TwistedComplex& tc) {
  const TwistedCohomology h(tc);
  std::map<Theory, std::vector<long>> dims;
  for (Theory t : kTheories) dims[t] = h.dims(t);
  std::vector<CheckResult> out;
  try {
    for (const auto& i : frolicherAudit(dims, tc.twist.theta1.isZero())) {
      out.push_back({Suite::Frolicher,
                     "k=" + std::to_string(i.degree) + ": " + i.relation, i.holds,
                     !i.asserted,
                     std::to_string(i.lhs) + " vs " + std::to_string(i.rhs)});
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InequalityViolation) throw;
    out.push_back({Suite::Frolicher, "Frolicher-type inequalities", false, false, e.what()});
  }
  return out;
}

}  // namespace

std::vector<CheckResult> runSuite(Suite suite, const TwistedComplex& tc,
                                  const Metric& metric) {
  switch (suite) {
    case Suite::Operators: return operatorSuite(tc, metric);
    case Suite::Hodge: return hodgeSuite(tc, metric);
    case Suite::Kahler: return kahlerSuite(tc, metric);
    case Suite::Duality: return dualitySuite(tc, metric);
    case Suite::Frolicher: return frolicherSuite(tc);
  }
  return {};
}

}  // namespace twisted_hodge
