#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jrepair/rules.hpp"

namespace jrepair {

/// Exact ratio; kept unreduced so reports can show "300/315".
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Integer percentage, truncated (Table 3 rounds 300/316 = 94.9% down to 94%).
  std::int64_t percent() const { return num * 100 / den; }
  bool operator==(const Fraction& o) const { return num * o.den == o.num * den; }
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// num/den, or nothing when den is 0.
std::optional<Fraction> ratio(std::int64_t num, std::int64_t den);

struct RuleStats {
  std::optional<RuleId> rule;  // empty for the ALL row
  std::int64_t dv = 0;
  std::int64_t tv = 0;
  std::int64_t dv_after = 0;
  std::int64_t fv = 0;
  std::optional<Fraction> tdr, ftr, fdr;
  std::int64_t trt_minutes = 0;
  std::vector<std::string> warnings;
};

/// Stats from raw counts; fv = dv - dv_after.
RuleStats compute_stats(RuleId rule, std::int64_t dv, std::int64_t tv, std::int64_t dv_after);
/// Stats when the fixed count is known directly (e.g. published tables).
RuleStats stats_from_counts(RuleId rule, std::int64_t dv, std::int64_t tv, std::int64_t fv);

struct RepairReport {
  std::vector<RuleStats> rules;
  RuleStats all;
};

/// Sums counts and recomputes the ratios from the sums.
RepairReport aggregate(const std::vector<RuleStats>& stats);

/// Text table laid out like the paper's applicability table.
std::string render_table(const RepairReport& report);

}  // namespace jrepair
