#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jrepair/history.hpp"
#include "jrepair/metrics.hpp"
#include "jrepair/pipeline.hpp"

namespace jrepair {

using Json = nlohmann::ordered_json;

Json violation_json(const ViolationRecord& rec, const std::string& path);
Json violation_json(const Violation& v, const std::string& path);
Json fraction_json(const std::optional<Fraction>& f);
Json stats_json(const RuleStats& s);
Json report_json(const RepairReport& report);
Json history_json(const HistoryReport& report);

/// Detected/target flags read back from a serialized violation list.
struct SerializedViolation {
  RuleId rule;
  std::string path;
  bool target = false;
};
/// Throws std::runtime_error on malformed input.
std::vector<SerializedViolation> violations_from_json(const Json& list);

/// Per-rule stats over `rules` from before/after violation lists.
RepairReport report_from_violations(const std::set<RuleId>& rules, const std::vector<SerializedViolation>& before,
                                    const std::vector<SerializedViolation>& after);

/// Short description of how "introduced" is counted, emitted in scan reports.
extern const char* const kIntroducedDefinition;

}  // namespace jrepair
