#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "relacheck/errors.hpp"
#include "relacheck/match.hpp"
#include "relacheck/rng.hpp"

#include "suite_checks.hpp"

using namespace relacheck;

namespace {

// Both perfect matchings of this instance are stable: each side's
// favorites are crossed.
const MatchPreferences kCrossed{{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}};
// Everyone agrees on the ranking: exactly one stable matching.
const MatchPreferences kUniform2{{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}};

MatchInstance with_match(const MatchPreferences& prefs, Matching match) {
  return MatchInstance{prefs, std::move(match)};
}

// Independent oracle: all n! perfect matchings, keeping those without a
// blocking pair. The blocking-pair scan is written out here rather than
// reusing is_stable.
std::set<Matching> brute_force_stable(const MatchPreferences& prefs) {
  const int n = static_cast<int>(prefs.size());
  const auto rank = [](const std::vector<int>& row, int x) {
    return static_cast<int>(std::find(row.begin(), row.end(), x) -
                            row.begin());
  };
  std::vector<int> assignment(static_cast<std::size_t>(n));
  std::iota(assignment.begin(), assignment.end(), 0);
  std::set<Matching> out;
  do {
    bool blocked = false;
    for (int c = 0; c < n && !blocked; ++c) {
      for (int k = 0; k < n && !blocked; ++k) {
        if (assignment[static_cast<std::size_t>(c)] == k) continue;
        // The company currently holding k is assignment^{-1}(k).
        int holder = 0;
        while (assignment[static_cast<std::size_t>(holder)] != k) ++holder;
        const bool c_prefers =
            rank(prefs.candidate_prefs[static_cast<std::size_t>(c)], k) <
            rank(prefs.candidate_prefs[static_cast<std::size_t>(c)],
                 assignment[static_cast<std::size_t>(c)]);
        const bool k_prefers =
            rank(prefs.company_prefs[static_cast<std::size_t>(k)], c) <
            rank(prefs.company_prefs[static_cast<std::size_t>(k)], holder);
        blocked = c_prefers && k_prefers;
      }
    }
    if (!blocked) {
      Matching matching;
      for (int c = 0; c < n; ++c) {
        matching.insert({c, assignment[static_cast<std::size_t>(c)]});
      }
      out.insert(std::move(matching));
    }
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  return out;
}

}  // namespace

TEST_CASE("stability on the documented instances") {
  CHECK(match_is_valid(with_match(kCrossed, {{0, 0}, {1, 1}})));
  CHECK(match_is_valid(with_match(kCrossed, {{0, 1}, {1, 0}})));
  // (0,0) blocks: both prefer each other over their assigned partners.
  CHECK_FALSE(is_stable(with_match(kUniform2, {{0, 1}, {1, 0}})));
  CHECK_FALSE(match_is_valid(with_match(kUniform2, {{0, 1}, {1, 0}})));

  CHECK(is_stable(with_match(kUniform2, {})));  // vacuous
}

TEST_CASE("is_unique and is_complete") {
  CHECK(is_unique(with_match(kUniform2, {})));
  CHECK_FALSE(is_unique(with_match(kUniform2, {{0, 0}, {1, 0}})));
  CHECK(is_unique(with_match(kUniform2, {{0, 0}, {1, 1}})));

  CHECK(is_complete(with_match(kUniform2, {{0, 0}, {1, 1}})));
  CHECK_FALSE(is_complete(with_match(kUniform2, {{0, 0}})));
  CHECK(is_complete(MatchInstance{MatchPreferences{{}, {}}, {}}));
}

TEST_CASE("match_is_valid is the conjunction of its sub-predicates") {
  rng::Engine engine(555);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + engine.below(4);
    MatchInstance instance{generate_match_input(n, engine.next()), {}};
    const std::size_t pairs = engine.below(n + 2);
    for (std::size_t p = 0; p < pairs; ++p) {
      instance.match.insert({static_cast<int>(engine.below(n)),
                             static_cast<int>(engine.below(n))});
    }
    CHECK(match_is_valid(instance) ==
          (is_stable(instance) && is_unique(instance) &&
           is_complete(instance)));
  }
}

TEST_CASE("enumerate_stable_matchings on the documented instances") {
  const std::set<Matching> crossed_expected = {{{0, 0}, {1, 1}},
                                               {{0, 1}, {1, 0}}};
  CHECK(enumerate_stable_matchings(kCrossed) == crossed_expected);

  const MatchPreferences one{{{0}}, {{0}}};
  CHECK(enumerate_stable_matchings(one) == std::set<Matching>{{{0, 0}}});

  CHECK(enumerate_stable_matchings(kUniform2) ==
        std::set<Matching>{{{0, 0}, {1, 1}}});
}

TEST_CASE("enumerate_stable_matchings equals the brute force") {
  rng::Engine engine(808);
  for (int i = 0; i < 50; ++i) {
    const MatchPreferences prefs =
        generate_match_input(engine.below(6), engine.next());
    const std::set<Matching> enumerated = enumerate_stable_matchings(prefs);
    CHECK(enumerated == brute_force_stable(prefs));
    for (const Matching& m : enumerated) {
      const MatchInstance instance{prefs, m};
      CHECK(is_unique(instance));
      CHECK(is_complete(instance));
    }
  }
}

TEST_CASE("enumerate_stable_matchings enforces its bound") {
  const MatchPreferences seven = generate_match_input(7, 1);
  CHECK_THROWS_AS(enumerate_stable_matchings(seven), SizeLimitError);
}

TEST_CASE("find_instance_violating_exactly isolates each sub-property") {
  for (const char* target : {prop::kStable, prop::kUnique, prop::kComplete}) {
    for (int n : {2, 3}) {
      CAPTURE(target);
      CAPTURE(n);
      const MatchInstance witness = find_instance_violating_exactly(target, n);
      CHECK(violated_names(witness) == std::set<std::string>{target});
      // Deterministic: the search replays to the same witness.
      CHECK(find_instance_violating_exactly(target, n) == witness);
    }
  }
}

TEST_CASE("find_instance_violating_exactly checks its arguments") {
  CHECK_THROWS_AS(find_instance_violating_exactly(prop::kStable, 1),
                  ValidationError);
  CHECK_THROWS_AS(find_instance_violating_exactly("ORDERED", 2),
                  ValidationError);
}

TEST_CASE("generate_match_input contract") {
  const MatchPreferences empty = generate_match_input(0, 9);
  CHECK(empty.candidate_prefs.empty());
  CHECK(empty.company_prefs.empty());

  CHECK(generate_match_input(4, 77) == generate_match_input(4, 77));

  const MatchPreferences prefs = generate_match_input(5, 123);
  for (const auto& matrix : {prefs.candidate_prefs, prefs.company_prefs}) {
    for (const auto& row : matrix) {
      std::vector<int> sorted = row;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4});
    }
  }
}

TEST_CASE("gale_shapley emits a valid matching") {
  rng::Engine engine(99);
  for (int i = 0; i < 25; ++i) {
    const MatchPreferences prefs =
        generate_match_input(1 + engine.below(5), engine.next());
    CHECK(match_is_valid(MatchInstance{prefs, gale_shapley(prefs)}));
  }
  CHECK(gale_shapley(MatchPreferences{{}, {}}).empty());
}

TEST_CASE("preference validation names the offending field") {
  try {
    validate_match_instance(
        MatchInstance{MatchPreferences{{{0, 1}, {0, 1}}, {{0, 1}, {1, 1}}},
                      {}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "company_prefs");
  }

  CHECK_THROWS_AS(validate_match_instance(MatchInstance{
                      MatchPreferences{{{0, 1}}, {{0, 1}, {1, 0}}}, {}}),
                  ValidationError);
}

TEST_CASE("match suite meta-invariants hold") {
  const auto failures = testing::suite_meta_failures(Problem::kMatch);
  for (const std::string& f : failures) MESSAGE(f);
  CHECK(failures.empty());
}

TEST_CASE("the RELATIONAL suite covers multiple stable matchings") {
  for (const TestSuite& suite : build_match_suites()) {
    if (suite.name != suite::kRelational) continue;
    CHECK(suite.cases.size() >= 2);
    for (const TestCase& c : suite.cases) CHECK(c.expected);
  }
}

TEST_CASE("the FUNCTIONAL rejection violates all three sub-properties") {
  for (const TestSuite& suite : build_match_suites()) {
    if (suite.name != suite::kFunctional) continue;
    for (const TestCase& c : suite.cases) {
      if (c.expected) continue;
      const auto& instance = std::get<MatchInstance>(c.instance);
      CHECK_FALSE(is_stable(instance));
      CHECK_FALSE(is_unique(instance));
      CHECK_FALSE(is_complete(instance));
    }
  }
}
