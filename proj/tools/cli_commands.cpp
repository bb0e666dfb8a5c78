#include "cli_commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "twisted_hodge/catalog.hpp"
#include "twisted_hodge/report_json.hpp"
#include "twisted_hodge/suites.hpp"

namespace twisted_hodge::cli {

using nlohmann::json;

namespace {

struct LoadedModel {
  std::string name;
  LieComplexSpec spec;
  std::shared_ptr<const InvariantComplex> complex;
  std::optional<Form> hint;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void requireFormat(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "table") {
    fail(ErrorKind::ParseError, "format must be json or table");
  }
}

LoadedModel loadModel(const RunConfig& cfg) {
  requireFormat(cfg);
  if (cfg.model.has_value() == cfg.file.has_value()) {
    fail(ErrorKind::ParseError, "give exactly one of --model and --file");
  }
  LoadedModel m;
  std::string hint;
  if (cfg.model) {
    const CatalogEntry entry = builtinModel(*cfg.model);
    m.name = entry.key;
    m.spec = entry.spec;
    hint = witnessHint(entry.key);
  } else {
    m.spec = parseSpecText(readFile(*cfg.file));
    m.name = m.spec.name.empty() ? *cfg.file : m.spec.name;
  }
  m.complex = buildInvariantComplex(m.spec, cfg.allowLarge);
  if (cfg.primitive) {
    m.hint = parseForm(*cfg.primitive, m.complex->basis);
  } else if (!hint.empty()) {
    m.hint = parseForm(hint, m.complex->basis);
  }
  return m;
}

TwistedComplex loadTwist(const RunConfig& cfg, const LoadedModel& m) {
  const FormBasis& basis = m.complex->basis;
  return twistedComplex(m.complex, parseTwist(cfg.theta1, basis),
                        parseTwist(cfg.theta2, basis));
}

Metric loadMetric(const RunConfig& cfg, const LoadedModel& m) {
  if (cfg.metric) {
    json rows;
    try {
      rows = json::parse(*cfg.metric);
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, std::string("metric is not valid JSON: ") + e.what());
    }
    return buildMetric(*m.complex, parseGramJson(rows, m.spec.n));
  }
  if (m.spec.metric) return buildMetric(*m.complex, *m.spec.metric);
  return buildMetric(*m.complex);
}

void print(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace

std::vector<int> parseDegrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size() || v < 0) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad degree list '" + text + "'");
    }
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(item));
    } else {
      const int lo = number(item.substr(0, dash));
      const int hi = number(item.substr(dash + 1));
      if (lo > hi) fail(ErrorKind::ParseError, "bad degree range '" + item + "'");
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    }
  }
  if (out.empty()) fail(ErrorKind::ParseError, "empty degree list");
  return out;
}

int runCompute(const RunConfig& cfg, std::ostream& out) {
  const LoadedModel m = loadModel(cfg);
  const TwistedComplex tc = loadTwist(cfg, m);
  const TwistedCohomology h(tc);
  CohomologyReport report = buildReport(m.name, h, true, m.hint);
  if (cfg.degrees) {
    const std::vector<int> degrees = parseDegrees(*cfg.degrees);
    for (int k : degrees) {
      if (k > h.topDegree()) fail(ErrorKind::DimensionError, "degree out of range");
    }
    restrictDegrees(report, degrees);
  }
  if (cfg.format == "json") {
    print(out, toJson(report));
  } else {
    out << renderTable(report);
  }
  return 0;
}

int runVerify(const RunConfig& cfg, std::ostream& out) {
  const LoadedModel m = loadModel(cfg);
  const TwistedComplex tc = loadTwist(cfg, m);
  const Metric metric = loadMetric(cfg, m);

  std::vector<CheckResult> checks;
  if (cfg.suite == "all") {
    for (Suite s : kSuites) {
      if (s == Suite::Kahler && !metric.kahler) {
        checks.push_back({s, "kahler suite", true, true,
                          "skipped: the metric is not Kaehler"});
        continue;
      }
      const auto part = runSuite(s, tc, metric);
      checks.insert(checks.end(), part.begin(), part.end());
    }
  } else {
    checks = runSuite(parseSuite(cfg.suite), tc, metric);
  }
  const bool pass = allPass(checks);

  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& c : checks) {
      json row = {{"suite", suiteKey(c.suite)}, {"check", c.name}, {"pass", c.pass}};
      if (c.informational) row["informational"] = true;
      if (!c.detail.empty()) row["detail"] = c.detail;
      rows.push_back(row);
    }
    print(out, {{"schema", kReportSchema},
                {"model", m.name},
                {"suite", cfg.suite},
                {"checks", rows},
                {"pass", pass}});
  } else {
    for (const auto& c : checks) {
      out << (c.informational ? "INFO" : c.pass ? "PASS" : "FAIL") << "  ["
          << suiteKey(c.suite) << "] " << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
    out << (pass ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return pass ? 0 : 3;
}

int runWitness(const RunConfig& cfg, std::ostream& out) {
  const LoadedModel m = loadModel(cfg);
  const TwistedComplex tc = loadTwist(cfg, m);
  const TwistedCohomology h(tc);
  std::optional<int> degree;
  if (cfg.degrees) {
    const std::vector<int> degrees = parseDegrees(*cfg.degrees);
    if (degrees.size() != 1) fail(ErrorKind::ParseError, "witness takes a single degree");
    degree = degrees.front();
  }
  const Witness w = extractWitness(h, degree, m.hint);
  const FormBasis& basis = tc.basis();
  const WitnessSummary summary = summarizeWitness(w, basis);

  // Round trip through the printed notation and recheck from scratch.
  std::optional<Form> primitive;
  if (summary.primitive) primitive = parseForm(*summary.primitive, basis);
  const Witness again = verifyWitness(tc, parseForm(summary.form, basis), primitive);
  const bool reverified = summarizeWitness(again, basis) == summary &&
                          again.delClosed && again.delbarClosed && again.exact &&
                          again.notDelDelbarExact;
  if (!reverified) fail(ErrorKind::InternalError, "witness does not survive re-verification");

  if (cfg.format == "json") {
    json doc = toJson(summary);
    doc["schema"] = kReportSchema;
    doc["model"] = m.name;
    doc["reverified"] = reverified;
    print(out, doc);
  } else {
    out << "degree     " << summary.degree << "\n"
        << "witness    " << summary.form << "\n";
    if (summary.primitive) {
      out << "primitive  " << *summary.primitive << "  (under " << summary.primitiveOperator
          << ")\n";
    }
    out << "del_tw w = 0                  " << (summary.delClosed ? "yes" : "no") << "\n"
        << "delbar_tw w = 0               " << (summary.delbarClosed ? "yes" : "no") << "\n"
        << "w in im del_tw + im delbar_tw " << (summary.exact ? "yes" : "no") << "\n"
        << "w not in im del_tw delbar_tw  " << (summary.notDelDelbarExact ? "yes" : "no")
        << "\n";
  }
  return 0;
}

int runCatalogList(const RunConfig& cfg, std::ostream& out) {
  requireFormat(cfg);
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& key : catalogKeys()) {
      const CatalogEntry e = builtinModel(key);
      rows.push_back({{"key", e.key}, {"name", e.spec.name}, {"n", e.spec.n}, {"note", e.note}});
    }
    print(out, {{"schema", kReportSchema}, {"models", rows}});
  } else {
    for (const auto& key : catalogKeys()) {
      const CatalogEntry e = builtinModel(key);
      out << std::left << std::setw(10) << e.key << " n=" << e.spec.n << "  " << e.spec.name
          << "\n";
    }
  }
  return 0;
}

int runCatalogShow(const RunConfig& cfg, const std::string& key, std::ostream& out) {
  requireFormat(cfg);
  const CatalogEntry e = builtinModel(key);
  buildInvariantComplex(e.spec);
  json twists = json::array();
  for (const auto& [t1, t2] : e.twists) twists.push_back({{"theta1", t1}, {"theta2", t2}});
  if (cfg.format == "json") {
    print(out, {{"schema", kReportSchema},
                {"key", e.key},
                {"note", e.note},
                {"spec", specToJson(e.spec)},
                {"twists", twists}});
  } else {
    out << e.key << ": " << e.spec.name << "\n" << e.note << "\n" << specToJson(e.spec).dump(2)
        << "\ntwists:\n";
    for (const auto& [t1, t2] : e.twists) out << "  (" << t1 << ", " << t2 << ")\n";
  }
  return 0;
}

int runExport(const RunConfig& cfg, std::ostream& out) {
  const LoadedModel m = loadModel(cfg);
  LieComplexSpec spec = m.spec;
  if (cfg.metric) spec.metric = loadMetric(cfg, m).gram;
  print(out, specToJson(spec));
  return 0;
}

}  // namespace twisted_hodge::cli
