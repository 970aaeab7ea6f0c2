#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/classify.hpp"

namespace pretzel {

/// One expected-verdict record. Only the fields present in the file are
/// compared.
struct FixtureCase {
  std::string label;  ///< knot text or "family k r"
  PretzelKnot knot;
  std::string source;
  std::map<std::string, std::string> expected;  ///< ffp, rtfn, biorder, sigma2_lo
  std::optional<std::size_t> index;
  std::optional<std::vector<long>> alexander;   ///< compared up to +-t^k
  std::map<std::string, std::vector<std::string>> rewritings;  ///< side -> words
};

/// Reads a JSON list of cases. Throws ParseError on malformed entries.
std::vector<FixtureCase> load_fixtures(const std::string& path);
std::vector<FixtureCase> parse_fixtures(const std::string& text);

struct FixtureResult {
  const FixtureCase* fixture = nullptr;
  KnotReport report;
  std::vector<std::string> mismatches;  ///< "field: expected X, got Y"
  bool passed() const { return mismatches.empty(); }
};

std::vector<std::string> compare(const FixtureCase& fixture, const KnotReport& report);

/// Runs the cases whose source is in `only` (all when empty), in file order.
std::vector<FixtureResult> run_fixtures(const std::vector<FixtureCase>& cases, const AnalysisOptions& options,
                                        const std::vector<std::string>& only = {});

}  // namespace pretzel
