#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace twisted_hodge::cli {

struct RunConfig {
  std::optional<std::string> model;
  std::optional<std::string> file;
  std::string theta1 = "0";
  std::string theta2 = "0";
  std::optional<std::string> metric;
  std::string format = "json";
  std::optional<std::string> degrees;
  bool allowLarge = false;
  std::string suite = "all";
  std::optional<std::string> primitive;
};

/// Each command writes its result to `out` and returns the exit code.
int runCompute(const RunConfig& cfg, std::ostream& out);
int runVerify(const RunConfig& cfg, std::ostream& out);
int runWitness(const RunConfig& cfg, std::ostream& out);
int runCatalogList(const RunConfig& cfg, std::ostream& out);
int runCatalogShow(const RunConfig& cfg, const std::string& key, std::ostream& out);
int runExport(const RunConfig& cfg, std::ostream& out);

/// "0,2,5" or "1-3" (mixable: "0,2-4").
std::vector<int> parseDegrees(const std::string& text);

}  // namespace twisted_hodge::cli
