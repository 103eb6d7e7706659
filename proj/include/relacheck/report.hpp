#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "relacheck/harness.hpp"

namespace relacheck {

// Venn-region counts over a set of candidates: one region per exact
// rejecting-set, with FUNCTIONAL-failing candidates tallied separately and
// excluded from the regions. Region counts plus not_functional always sum
// to the universe.
struct VennReport {
  std::size_t universe = 0;
  std::size_t not_functional = 0;
  std::map<std::set<std::string>, std::size_t> regions;

  friend bool operator==(const VennReport&, const VennReport&) = default;
};

// All patterns must come from the same problem; throws AggregationError
// otherwise.
VennReport aggregate(const std::vector<RejectionPattern>& patterns);

enum class ReportFormat { kJson, kText };

// json: canonical serialization with lexicographic region keys (suite
// names joined by '+'); text: regions by descending count, then universe
// and not_functional lines.
std::string render(const VennReport& report, ReportFormat format);

VennReport parse_report(const std::string& json_text);

std::string region_key(const std::set<std::string>& suites);
std::set<std::string> parse_region_key(const std::string& key);

}  // namespace relacheck
