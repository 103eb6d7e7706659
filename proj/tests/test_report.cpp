#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "relacheck/errors.hpp"
#include "relacheck/report.hpp"
#include "relacheck/rng.hpp"

using namespace relacheck;

namespace {

RejectionPattern stub_pattern(std::string id, Problem problem,
                              bool functional_accepted,
                              std::set<std::string> rejected_by) {
  RejectionPattern pattern;
  pattern.candidate_id = std::move(id);
  pattern.problem = problem;
  pattern.functional_accepted = functional_accepted;
  pattern.rejected_by = std::move(rejected_by);
  return pattern;
}

std::vector<RejectionPattern> corpus_patterns(Problem problem) {
  std::vector<RejectionPattern> patterns;
  for (const MutantSpec& spec : mutant_corpus(problem)) {
    patterns.push_back(classify(Candidate::mutant(spec.name), problem));
  }
  patterns.push_back(classify(Candidate::reference(), problem));
  return patterns;
}

}  // namespace

TEST_CASE("aggregate on the degenerate inputs") {
  const VennReport empty = aggregate({});
  CHECK(empty.universe == 0);
  CHECK(empty.not_functional == 0);
  CHECK(empty.regions.empty());

  std::vector<RejectionPattern> three(
      3, stub_pattern("reference", Problem::kSort, true, {}));
  const VennReport report = aggregate(three);
  CHECK(report.universe == 3);
  CHECK(report.regions.at({}) == 3);
}

TEST_CASE("aggregate refuses mixed problems") {
  CHECK_THROWS_AS(
      aggregate({stub_pattern("a", Problem::kSort, true, {}),
                 stub_pattern("b", Problem::kToposort, true, {})}),
      AggregationError);
}

TEST_CASE("aggregating the sort corpus lands exact-equality in RELATIONAL") {
  const std::vector<RejectionPattern> patterns =
      corpus_patterns(Problem::kSort);
  const VennReport report = aggregate(patterns);

  CHECK(report.universe == patterns.size());
  CHECK(report.regions.at({suite::kRelational}) >= 1);

  std::size_t region_total = 0;
  for (const auto& [suites, count] : report.regions) region_total += count;
  CHECK(region_total + report.not_functional == report.universe);

  std::size_t expected_not_functional = 0;
  for (const RejectionPattern& p : patterns) {
    if (!p.functional_accepted) ++expected_not_functional;
  }
  CHECK(report.not_functional == expected_not_functional);
}

TEST_CASE("aggregate is permutation-invariant and partitions candidates") {
  std::vector<RejectionPattern> patterns = corpus_patterns(Problem::kToposort);
  const VennReport before = aggregate(patterns);

  rng::Engine engine(5);
  for (std::size_t i = patterns.size(); i > 1; --i) {
    std::swap(patterns[i - 1], patterns[engine.below(i)]);
  }
  CHECK(aggregate(patterns) == before);

  // Each functional-accepted pattern lands in exactly one region.
  std::size_t accepted = 0;
  for (const RejectionPattern& p : patterns) {
    if (p.functional_accepted) ++accepted;
  }
  std::size_t region_total = 0;
  for (const auto& [suites, count] : before.regions) region_total += count;
  CHECK(region_total == accepted);
}

TEST_CASE("patterns rejecting a refinement also reject SAME-ELEMENTS") {
  for (Problem problem : {Problem::kSort, Problem::kToposort}) {
    for (const RejectionPattern& pattern : corpus_patterns(problem)) {
      const bool refinement =
          pattern.rejected_by.contains(suite::kEnforceRetain) ||
          pattern.rejected_by.contains(suite::kEnforceNoNew) ||
          pattern.rejected_by.contains(suite::kEnforceNotDisjoint);
      if (refinement) {
        CHECK(pattern.rejected_by.contains(suite::kEnforceSameElements));
      }
    }
  }
}

TEST_CASE("region keys are canonical and parse back") {
  const std::set<std::string> suites = {suite::kRelational,
                                        suite::kEnforceOrdered};
  CHECK(region_key(suites) == "ENFORCE-ORDERED+RELATIONAL");
  CHECK(parse_region_key("ENFORCE-ORDERED+RELATIONAL") == suites);
  CHECK(parse_region_key("").empty());
}

TEST_CASE("render json round-trips byte-identically") {
  const VennReport empty;
  CHECK(render(empty, ReportFormat::kJson) ==
        R"({"not_functional":0,"regions":{},"universe":0})");
  CHECK(parse_report(render(empty, ReportFormat::kJson)) == empty);

  const VennReport report =
      aggregate(corpus_patterns(Problem::kMatch));
  const std::string first = render(report, ReportFormat::kJson);
  CHECK(parse_report(first) == report);
  CHECK(render(parse_report(first), ReportFormat::kJson) == first);
}

TEST_CASE("text rendering sums to the universe") {
  const VennReport report = aggregate(corpus_patterns(Problem::kSort));
  const std::string text = render(report, ReportFormat::kText);

  std::istringstream lines(text);
  std::string line;
  std::size_t sum = 0;
  std::size_t universe = 0;
  std::size_t not_functional = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("universe:", 0) == 0) {
      universe = std::stoul(line.substr(9));
    } else if (line.rfind("not_functional:", 0) == 0) {
      not_functional = std::stoul(line.substr(15));
    } else if (line.rfind("rejected by", 0) != 0 && !line.empty()) {
      sum += std::stoul(line.substr(line.find_last_of(' ') + 1));
    }
  }
  CHECK(sum + not_functional == universe);
  CHECK(universe == report.universe);
}
