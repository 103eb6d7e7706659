#include "relacheck/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "relacheck/errors.hpp"

namespace relacheck {

using nlohmann::json;

std::string region_key(const std::set<std::string>& suites) {
  std::string key;
  for (const std::string& name : suites) {  // std::set is already sorted
    if (!key.empty()) key += '+';
    key += name;
  }
  return key;
}

std::set<std::string> parse_region_key(const std::string& key) {
  std::set<std::string> suites;
  if (key.empty()) return suites;
  std::size_t start = 0;
  while (true) {
    const std::size_t sep = key.find('+', start);
    if (sep == std::string::npos) {
      suites.insert(key.substr(start));
      return suites;
    }
    suites.insert(key.substr(start, sep - start));
    start = sep + 1;
  }
}

VennReport aggregate(const std::vector<RejectionPattern>& patterns) {
  VennReport report;
  report.universe = patterns.size();
  if (patterns.empty()) return report;

  const Problem problem = patterns.front().problem;
  for (const RejectionPattern& pattern : patterns) {
    if (pattern.problem != problem) {
      throw AggregationError(
          "patterns mix problems " +
          std::string(problem_name(problem)) + " and " +
          std::string(problem_name(pattern.problem)));
    }
    if (!pattern.functional_accepted) {
      ++report.not_functional;
    } else {
      ++report.regions[pattern.rejected_by];
    }
  }
  return report;
}

std::string render(const VennReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json regions = json::object();
    for (const auto& [suites, count] : report.regions) {
      regions[region_key(suites)] = count;
    }
    const json j{{"universe", report.universe},
                 {"not_functional", report.not_functional},
                 {"regions", std::move(regions)}};
    return j.dump();
  }

  std::vector<std::pair<std::string, std::size_t>> rows;
  std::size_t widest = std::string("rejected by").size();
  for (const auto& [suites, count] : report.regions) {
    std::string label = suites.empty() ? "(none)" : region_key(suites);
    widest = std::max(widest, label.size());
    rows.emplace_back(std::move(label), count);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });

  std::ostringstream out;
  out << "rejected by";
  out << std::string(widest - std::string("rejected by").size() + 2, ' ')
      << "count\n";
  for (const auto& [label, count] : rows) {
    out << label << std::string(widest - label.size() + 2, ' ') << count
        << "\n";
  }
  out << "universe: " << report.universe << "\n";
  out << "not_functional: " << report.not_functional << "\n";
  return out.str();
}

VennReport parse_report(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError("report", std::string("unparsable JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("universe") ||
      !j.contains("not_functional") || !j.contains("regions")) {
    throw ValidationError("report", "not a report object");
  }
  VennReport report;
  report.universe = j.at("universe").get<std::size_t>();
  report.not_functional = j.at("not_functional").get<std::size_t>();
  for (const auto& [key, value] : j.at("regions").items()) {
    report.regions[parse_region_key(key)] = value.get<std::size_t>();
  }
  return report;
}

}  // namespace relacheck
