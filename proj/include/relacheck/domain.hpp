#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace relacheck {

enum class Problem { kSort, kMatch, kToposort };

std::string_view problem_name(Problem problem);
Problem problem_from_name(std::string_view name);  // throws ValidationError

// A named individual with an integer age. Generators only ever emit
// non-negative ages, but instances fed to candidates may carry any
// integer (overreach probes use negative and > 32-bit values).
struct Person {
  std::string name;
  std::int64_t age = 0;

  friend auto operator<=>(const Person&, const Person&) = default;
};

struct SortInstance {
  std::vector<Person> lst;
  std::vector<Person> srt;

  friend bool operator==(const SortInstance&, const SortInstance&) = default;
};

// Row i of each matrix ranks the other side for member i, best first.
// Every row must be a permutation of 0..n-1.
struct MatchPreferences {
  std::vector<std::vector<int>> candidate_prefs;
  std::vector<std::vector<int>> company_prefs;

  std::size_t size() const { return candidate_prefs.size(); }

  friend bool operator==(const MatchPreferences&,
                         const MatchPreferences&) = default;
};

// (candidate index, company index) pairs; duplicates collapse on parse.
using Matching = std::set<std::pair<int, int>>;

struct MatchInstance {
  MatchPreferences prefs;
  Matching match;

  friend bool operator==(const MatchInstance&, const MatchInstance&) = default;
};

// Vertex identifiers are text. The vertex set is explicit so isolated
// vertices are representable; edges must reference members of it. srt is
// a candidate output and may mention anything.
struct ToposortInstance {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> srt;

  friend bool operator==(const ToposortInstance&,
                         const ToposortInstance&) = default;
};

using Instance = std::variant<SortInstance, MatchInstance, ToposortInstance>;

Problem problem_of(const Instance& instance);

// Sub-property names, per problem:
//   sort:     SAME-SIZE, SAME-ELEMENTS (RETAIN / NO-NEW / NOT-DISJOINT), ORDERED
//   match:    STABLE, UNIQUE, COMPLETE
//   toposort: SAME-ELEMENTS (RETAIN / NO-NEW / NOT-DISJOINT), ORDERED, NO-DUPS
namespace prop {
inline constexpr char kSameSize[] = "SAME-SIZE";
inline constexpr char kSameElements[] = "SAME-ELEMENTS";
inline constexpr char kOrdered[] = "ORDERED";
inline constexpr char kRetain[] = "RETAIN";
inline constexpr char kNoNew[] = "NO-NEW";
inline constexpr char kNotDisjoint[] = "NOT-DISJOINT";
inline constexpr char kStable[] = "STABLE";
inline constexpr char kUnique[] = "UNIQUE";
inline constexpr char kComplete[] = "COMPLETE";
inline constexpr char kNoDups[] = "NO-DUPS";
}  // namespace prop

struct SubProperty {
  Problem problem;
  std::string name;

  friend auto operator<=>(const SubProperty&, const SubProperty&) = default;
};

// The top-level conjuncts whose conjunction equals the problem's
// reference validity predicate (refinements excluded).
const std::set<std::string>& top_level_properties(Problem problem);

// Exactly the sub-properties (top-level plus applicable refinements of
// SAME-ELEMENTS) whose reference predicate fails on the instance. Empty
// iff the reference validity predicate accepts the instance. Throws
// ValidationError on structurally malformed instances.
std::set<SubProperty> violated_sub_properties(const SortInstance& instance);
std::set<SubProperty> violated_sub_properties(const MatchInstance& instance);
std::set<SubProperty> violated_sub_properties(const ToposortInstance& instance);
std::set<SubProperty> violated_sub_properties(const Instance& instance);

// Same result as a bare name set; convenient for assertions.
std::set<std::string> violated_names(const Instance& instance);

struct TestCase {
  Instance instance;
  bool expected = false;

  friend bool operator==(const TestCase&, const TestCase&) = default;
};

// A named list of (instance, expected) cases. ENFORCE-X suites hold
// cases violating exactly X (expected false); RELATIONAL, EDGE and
// OVERREACH suites hold only valid cases (expected true).
struct TestSuite {
  std::string name;
  std::vector<TestCase> cases;

  friend bool operator==(const TestSuite&, const TestSuite&) = default;
};

namespace suite {
inline constexpr char kFunctional[] = "FUNCTIONAL";
inline constexpr char kRelational[] = "RELATIONAL";
inline constexpr char kEdge[] = "EDGE";
inline constexpr char kEnforceSameSize[] = "ENFORCE-SAME-SIZE";
inline constexpr char kEnforceSameElements[] = "ENFORCE-SAME-ELEMENTS";
inline constexpr char kEnforceRetain[] = "ENFORCE-RETAIN";
inline constexpr char kEnforceNoNew[] = "ENFORCE-NO-NEW";
inline constexpr char kEnforceNotDisjoint[] = "ENFORCE-NOT-DISJOINT";
inline constexpr char kEnforceOrdered[] = "ENFORCE-ORDERED";
inline constexpr char kEnforceNoDups[] = "ENFORCE-NO-DUPS";
inline constexpr char kEnforceStable[] = "ENFORCE-STABLE";
inline constexpr char kEnforceUnique[] = "ENFORCE-UNIQUE";
inline constexpr char kEnforceComplete[] = "ENFORCE-COMPLETE";
inline constexpr char kOverreachNegativeAge[] = "OVERREACH-NEGATIVE-AGE";
inline constexpr char kOverreachOldAge[] = "OVERREACH-OLD-AGE";
}  // namespace suite

}  // namespace relacheck
