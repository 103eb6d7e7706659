#include "relacheck/domain.hpp"

#include <algorithm>

#include "relacheck/errors.hpp"

namespace relacheck {

std::string_view problem_name(Problem problem) {
  switch (problem) {
    case Problem::kSort:
      return "sort";
    case Problem::kMatch:
      return "match";
    case Problem::kToposort:
      return "toposort";
  }
  return "?";
}

Problem problem_from_name(std::string_view name) {
  if (name == "sort") return Problem::kSort;
  if (name == "match") return Problem::kMatch;
  if (name == "toposort") return Problem::kToposort;
  throw ValidationError("problem", "unknown problem '" + std::string(name) +
                                       "' (expected sort, match or toposort)");
}

Problem problem_of(const Instance& instance) {
  if (std::holds_alternative<SortInstance>(instance)) return Problem::kSort;
  if (std::holds_alternative<MatchInstance>(instance)) return Problem::kMatch;
  return Problem::kToposort;
}

const std::set<std::string>& top_level_properties(Problem problem) {
  static const std::set<std::string> sort_props = {
      prop::kSameSize, prop::kSameElements, prop::kOrdered};
  static const std::set<std::string> match_props = {
      prop::kStable, prop::kUnique, prop::kComplete};
  static const std::set<std::string> topo_props = {
      prop::kSameElements, prop::kOrdered, prop::kNoDups};
  switch (problem) {
    case Problem::kSort:
      return sort_props;
    case Problem::kMatch:
      return match_props;
    case Problem::kToposort:
      return topo_props;
  }
  return sort_props;
}

std::set<SubProperty> violated_sub_properties(const Instance& instance) {
  return std::visit([](const auto& inst) { return violated_sub_properties(inst); },
                    instance);
}

std::set<std::string> violated_names(const Instance& instance) {
  std::set<std::string> names;
  for (const SubProperty& sp : violated_sub_properties(instance)) {
    names.insert(sp.name);
  }
  return names;
}

}  // namespace relacheck
