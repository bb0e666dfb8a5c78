#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twisted_hodge/hodge.hpp"

namespace twisted_hodge {

enum class Suite { Operators, Hodge, Kahler, Duality, Frolicher };

inline constexpr std::array<Suite, 5> kSuites = {
    Suite::Operators, Suite::Hodge, Suite::Kahler, Suite::Duality, Suite::Frolicher};

/// "operators", "hodge", "kahler", "duality", "frolicher"
const char* suiteKey(Suite s);
/// Throws ParseError for an unknown name.
Suite parseSuite(std::string_view name);

struct CheckResult {
  Suite suite = Suite::Operators;
  std::string name;
  bool pass = false;
  /// Informational rows are reported but never fail a run.
  bool informational = false;
  std::string detail;
};

/// Runs one suite of exact checks. The Kähler suite throws NotKahler when the
/// metric is not Kähler.
std::vector<CheckResult> runSuite(Suite suite, const TwistedComplex& tc,
                                  const Metric& metric);

bool allPass(const std::vector<CheckResult>& checks);

}  // namespace twisted_hodge
