#include "twisted_hodge/report_json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace twisted_hodge {

using nlohmann::json;

WitnessSummary summarizeWitness(const Witness& w, const FormBasis& basis) {
  WitnessSummary s;
  s.degree = w.degree;
  s.form = formatForm(w.form, basis);
  if (w.primitive) s.primitive = formatForm(*w.primitive, basis);
  s.primitiveOperator = w.primitiveOperator;
  s.delClosed = w.delClosed;
  s.delbarClosed = w.delbarClosed;
  s.exact = w.exact;
  s.notDelDelbarExact = w.notDelDelbarExact;
  return s;
}

CohomologyReport buildReport(const std::string& model, const TwistedCohomology& h,
                             bool withWitness,
                             const std::optional<Form>& primitiveHint) {
  const TwistedComplex& tc = h.complex();
  const FormBasis& basis = tc.basis();
  CohomologyReport r;
  r.model = model;
  r.n = basis.n();
  r.theta1 = formatForm(tc.twist.theta1, basis);
  r.theta2 = formatForm(tc.twist.theta2, basis);
  r.phi = formatForm(tc.twist.phi, basis);

  std::map<Theory, std::vector<long>> dims;
  for (Theory t : kTheories) {
    dims[t] = h.dims(t);
    r.dims[theoryKey(t)] = dims[t];
  }

  const std::vector<MapRecord> maps = naturalMaps(h);
  for (const MapRecord& m : maps) {
    MapSummary s;
    s.key = mapKey(m.map);
    for (const auto& v : m.perDegree) {
      s.rank.push_back(v.rank);
      s.injective.push_back(v.injective);
      s.surjective.push_back(v.surjective);
    }
    r.maps.push_back(std::move(s));
  }
  const LemmaVerdict lemma = lemmaVerdict(maps);
  const HodgeVerdict hodge = hodgeDecompositionVerdict(maps, lemma);
  r.lemmaHolds = lemma.holds;
  r.lemmaFailingDegrees = lemma.failingDegrees;
  r.crossCheck = lemma.crossCheck;
  r.hodgeHolds = hodge.holds;
  r.hodgeFailingDegrees = hodge.failingDegrees;
  r.inequalities = frolicherAudit(dims, tc.twist.theta1.isZero());
  r.frolicherOk = std::all_of(r.inequalities.begin(), r.inequalities.end(),
                              [](const InequalityRecord& i) { return !i.asserted || i.holds; });

  if (tc.twist.theta1.isZero()) {
    std::map<std::string, std::vector<std::vector<long>>> table;
    for (const auto& [t, rows] : bigradedDims(h)) table[theoryKey(t)] = rows;
    r.bigraded = std::move(table);
  }
  if (withWitness && !lemma.holds) {
    r.witness = summarizeWitness(extractWitness(h, std::nullopt, primitiveHint), basis);
  }
  return r;
}

void restrictDegrees(CohomologyReport& report, const std::vector<int>& degrees) {
  auto keep = [&](auto& v) {
    using V = std::decay_t<decltype(v)>;
    V out;
    for (int k : degrees) {
      if (k >= 0 && k < static_cast<int>(v.size())) out.push_back(v[k]);
    }
    v = std::move(out);
  };
  for (auto& [key, v] : report.dims) keep(v);
  for (auto& m : report.maps) {
    keep(m.rank);
    keep(m.injective);
    keep(m.surjective);
  }
  std::vector<InequalityRecord> ineq;
  for (const auto& i : report.inequalities) {
    if (std::find(degrees.begin(), degrees.end(), i.degree) != degrees.end()) {
      ineq.push_back(i);
    }
  }
  report.inequalities = std::move(ineq);
}

json toJson(const WitnessSummary& w) {
  json j = {{"degree", w.degree},
            {"form", w.form},
            {"primitive_operator", w.primitiveOperator},
            {"del_closed", w.delClosed},
            {"delbar_closed", w.delbarClosed},
            {"exact", w.exact},
            {"not_del_delbar_exact", w.notDelDelbarExact}};
  j["primitive"] = w.primitive ? json(*w.primitive) : json(nullptr);
  return j;
}

WitnessSummary witnessFromJson(const json& j) {
  WitnessSummary w;
  w.degree = j.at("degree").get<int>();
  w.form = j.at("form").get<std::string>();
  if (!j.at("primitive").is_null()) w.primitive = j.at("primitive").get<std::string>();
  w.primitiveOperator = j.at("primitive_operator").get<std::string>();
  w.delClosed = j.at("del_closed").get<bool>();
  w.delbarClosed = j.at("delbar_closed").get<bool>();
  w.exact = j.at("exact").get<bool>();
  w.notDelDelbarExact = j.at("not_del_delbar_exact").get<bool>();
  return w;
}

json toJson(const CohomologyReport& r) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["model"] = r.model;
  doc["n"] = r.n;
  doc["invariant_level"] = true;
  doc["twist"] = {{"theta1", r.theta1}, {"theta2", r.theta2}, {"phi", r.phi}};
  doc["dims"] = r.dims;
  json maps = json::array();
  for (const auto& m : r.maps) {
    maps.push_back({{"map", m.key},
                    {"rank", m.rank},
                    {"injective", m.injective},
                    {"surjective", m.surjective}});
  }
  doc["maps"] = maps;
  const LemmaCrossCheck& c = r.crossCheck;
  doc["verdicts"] = {
      {"lemma_holds", r.lemmaHolds},
      {"lemma_failing_degrees", r.lemmaFailingDegrees},
      {"hodge_decomposition_holds", r.hodgeHolds},
      {"hodge_failing_degrees", r.hodgeFailingDegrees},
      {"frolicher_ok", r.frolicherOk},
      {"cross_check",
       {{"BC->A_injective", c.bcToAInjective},
        {"BC->A_bijective", c.bcToABijective},
        {"BC->del_and_BC->delbar_injective", c.bcToDelAndDelbarInjective},
        {"del->A_and_delbar->A_surjective", c.delAndDelbarToASurjective},
        {"BC->dR_injective", c.bcToDrInjective},
        {"dR->A_surjective", c.drToASurjective}}}};
  json ineq = json::array();
  for (const auto& i : r.inequalities) {
    ineq.push_back({{"degree", i.degree},
                    {"relation", i.relation},
                    {"lhs", i.lhs},
                    {"rhs", i.rhs},
                    {"holds", i.holds},
                    {"asserted", i.asserted}});
  }
  doc["inequalities"] = ineq;
  if (r.bigraded) doc["bigraded"] = *r.bigraded;
  if (r.witness) doc["witness"] = toJson(*r.witness);
  return doc;
}

CohomologyReport reportFromJson(const json& doc) {
  try {
    if (doc.at("schema") != kReportSchema) {
      fail(ErrorKind::ParseError, "unsupported report schema");
    }
    CohomologyReport r;
    r.model = doc.at("model").get<std::string>();
    r.n = doc.at("n").get<int>();
    const json& tw = doc.at("twist");
    r.theta1 = tw.at("theta1").get<std::string>();
    r.theta2 = tw.at("theta2").get<std::string>();
    r.phi = tw.at("phi").get<std::string>();
    r.dims = doc.at("dims").get<std::map<std::string, std::vector<long>>>();
    for (const auto& m : doc.at("maps")) {
      r.maps.push_back({m.at("map").get<std::string>(), m.at("rank").get<std::vector<long>>(),
                        m.at("injective").get<std::vector<bool>>(),
                        m.at("surjective").get<std::vector<bool>>()});
    }
    const json& v = doc.at("verdicts");
    r.lemmaHolds = v.at("lemma_holds").get<bool>();
    r.lemmaFailingDegrees = v.at("lemma_failing_degrees").get<std::vector<int>>();
    r.hodgeHolds = v.at("hodge_decomposition_holds").get<bool>();
    r.hodgeFailingDegrees = v.at("hodge_failing_degrees").get<std::vector<int>>();
    r.frolicherOk = v.at("frolicher_ok").get<bool>();
    const json& c = v.at("cross_check");
    r.crossCheck.bcToAInjective = c.at("BC->A_injective").get<bool>();
    r.crossCheck.bcToABijective = c.at("BC->A_bijective").get<bool>();
    r.crossCheck.bcToDelAndDelbarInjective =
        c.at("BC->del_and_BC->delbar_injective").get<bool>();
    r.crossCheck.delAndDelbarToASurjective =
        c.at("del->A_and_delbar->A_surjective").get<bool>();
    r.crossCheck.bcToDrInjective = c.at("BC->dR_injective").get<bool>();
    r.crossCheck.drToASurjective = c.at("dR->A_surjective").get<bool>();
    for (const auto& i : doc.at("inequalities")) {
      r.inequalities.push_back({i.at("degree").get<int>(), i.at("relation").get<std::string>(),
                                i.at("lhs").get<long>(), i.at("rhs").get<long>(),
                                i.at("holds").get<bool>(), i.at("asserted").get<bool>()});
    }
    if (doc.contains("bigraded")) {
      r.bigraded =
          doc.at("bigraded").get<std::map<std::string, std::vector<std::vector<long>>>>();
    }
    if (doc.contains("witness")) r.witness = witnessFromJson(doc.at("witness"));
    return r;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
}

namespace {

const char* yesNo(bool b) { return b ? "yes" : "no"; }

std::string joinInts(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (int k : v) out += (out.empty() ? "" : ",") + std::to_string(k);
  return out;
}

}  // namespace

std::string renderTable(const CohomologyReport& r) {
  std::ostringstream os;
  os << "model  " << r.model << " (n = " << r.n << ", invariant level)\n"
     << "theta1 " << r.theta1 << "\n"
     << "theta2 " << r.theta2 << "\n"
     << "phi    " << r.phi << "\n\n";

  const char* theories[] = {"dR", "del", "delbar", "BC", "A"};
  const std::size_t degrees = r.dims.at("dR").size();
  os << std::left << std::setw(4) << "k";
  for (const char* t : theories) os << std::right << std::setw(8) << t;
  os << "\n";
  for (std::size_t k = 0; k < degrees; ++k) {
    os << std::left << std::setw(4) << k;
    for (const char* t : theories) os << std::right << std::setw(8) << r.dims.at(t)[k];
    os << "\n";
  }

  os << "\n" << std::left << std::setw(12) << "map";
  for (std::size_t k = 0; k < degrees; ++k) os << std::right << std::setw(7) << k;
  os << "\n";
  for (const auto& m : r.maps) {
    os << std::left << std::setw(12) << m.key;
    for (std::size_t k = 0; k < m.rank.size(); ++k) {
      std::string cell = std::to_string(m.rank[k]);
      cell += m.injective[k] ? "i" : "";
      cell += m.surjective[k] ? "s" : "";
      os << std::right << std::setw(7) << cell;
    }
    os << "\n";
  }
  os << "(rank; i = injective, s = surjective)\n\n";

  os << "ddbar-lemma          " << yesNo(r.lemmaHolds)
     << "  failing degrees: " << joinInts(r.lemmaFailingDegrees) << "\n"
     << "hodge decomposition  " << yesNo(r.hodgeHolds)
     << "  failing degrees: " << joinInts(r.hodgeFailingDegrees) << "\n"
     << "frolicher            " << yesNo(r.frolicherOk) << "\n";
  for (const auto& i : r.inequalities) {
    if (!i.holds) {
      os << "  degree " << i.degree << ": " << i.relation << " fails (" << i.lhs << " < "
         << i.rhs << ")" << (i.asserted ? "" : ", not asserted") << "\n";
    }
  }

  if (r.bigraded) {
    for (const auto& [key, rows] : *r.bigraded) {
      os << "\nbigraded " << key << " (rows p, columns q)\n";
      for (const auto& row : rows) {
        for (long v : row) os << std::right << std::setw(4) << v;
        os << "\n";
      }
    }
  }

  if (r.witness) {
    const WitnessSummary& w = *r.witness;
    os << "\nwitness (degree " << w.degree << ")  " << w.form << "\n";
    if (w.primitive) os << "  = " << w.primitiveOperator << "(" << *w.primitive << ")\n";
    os << "  del_tw-closed " << yesNo(w.delClosed) << ", delbar_tw-closed "
       << yesNo(w.delbarClosed) << ", exact " << yesNo(w.exact)
       << ", not del_tw delbar_tw-exact " << yesNo(w.notDelDelbarExact) << "\n";
  }
  return os.str();
}

json errorToJson(const Error& e) {
  return {{"schema", kReportSchema},
          {"error", {{"kind", errorKindName(e.kind())}, {"message", e.what()}}}};
}

int exitCodeFor(ErrorKind kind) { return isInternalKind(kind) ? 3 : 2; }

}  // namespace twisted_hodge
