#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twisted_hodge/cohomology.hpp"
#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

inline constexpr const char* kReportSchema = "twisted-hodge/1";

struct MapSummary {
  std::string key;
  std::vector<long> rank;
  std::vector<bool> injective;
  std::vector<bool> surjective;
  friend bool operator==(const MapSummary&, const MapSummary&) = default;
};

struct WitnessSummary {
  int degree = 0;
  std::string form;
  std::optional<std::string> primitive;
  std::string primitiveOperator;
  bool delClosed = false;
  bool delbarClosed = false;
  bool exact = false;
  bool notDelDelbarExact = false;
  friend bool operator==(const WitnessSummary&, const WitnessSummary&) = default;
};

/// Everything `compute` reports for one model and twist. All results are
/// invariant-level.
struct CohomologyReport {
  std::string model;
  int n = 0;
  std::string theta1;
  std::string theta2;
  std::string phi;
  std::map<std::string, std::vector<long>> dims;
  std::vector<MapSummary> maps;
  bool lemmaHolds = false;
  std::vector<int> lemmaFailingDegrees;
  bool hodgeHolds = false;
  std::vector<int> hodgeFailingDegrees;
  bool frolicherOk = false;
  LemmaCrossCheck crossCheck;
  std::vector<InequalityRecord> inequalities;
  /// Only when θ₁ = 0: theory → [p][q].
  std::optional<std::map<std::string, std::vector<std::vector<long>>>> bigraded;
  std::optional<WitnessSummary> witness;
  friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

WitnessSummary summarizeWitness(const Witness& w, const FormBasis& basis);

/// Runs maps, verdicts and the inequality audit on h. When `withWitness` and
/// the lemma fails, the first failing degree's witness is attached.
CohomologyReport buildReport(const std::string& model, const TwistedCohomology& h,
                             bool withWitness = true,
                             const std::optional<Form>& primitiveHint = std::nullopt);

/// Keeps only the listed degrees in the per-degree fields.
void restrictDegrees(CohomologyReport& report, const std::vector<int>& degrees);

nlohmann::json toJson(const CohomologyReport& report);
CohomologyReport reportFromJson(const nlohmann::json& doc);

nlohmann::json toJson(const WitnessSummary& w);
WitnessSummary witnessFromJson(const nlohmann::json& doc);

/// Aligned text tables.
std::string renderTable(const CohomologyReport& report);

nlohmann::json errorToJson(const Error& e);

/// 2 for input errors, 3 for internal assertions.
int exitCodeFor(ErrorKind kind);

}  // namespace twisted_hodge
