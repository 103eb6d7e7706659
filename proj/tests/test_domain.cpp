#include <doctest.h>

#include <algorithm>

#include "relacheck/domain.hpp"
#include "relacheck/errors.hpp"
#include "relacheck/harness.hpp"
#include "relacheck/json_codec.hpp"
#include "relacheck/match.hpp"
#include "relacheck/rng.hpp"
#include "relacheck/sort.hpp"
#include "relacheck/toposort.hpp"

using namespace relacheck;
using nlohmann::json;

namespace {

Person person(const char* name, std::int64_t age) { return Person{name, age}; }

std::set<std::string> names(const Instance& instance) {
  return violated_names(instance);
}

// Random instances for the cross-cutting properties: valid pairs plus
// mutated ones covering drops, inventions, swaps and duplications.
SortInstance random_sort_instance(rng::Engine& engine) {
  const std::size_t n = engine.below(6);
  std::vector<Person> lst = generate_sort_input(n, engine.next());
  std::vector<Person> srt = sort_by_age(lst);
  switch (engine.below(6)) {
    case 0:
      break;  // leave valid
    case 1:
      if (!srt.empty()) srt.pop_back();
      break;
    case 2:
      srt.push_back(person("Z", static_cast<std::int64_t>(engine.below(9))));
      break;
    case 3:
      if (srt.size() >= 2) std::swap(srt.front(), srt.back());
      break;
    case 4:
      if (!srt.empty()) srt[engine.below(srt.size())].age -= 3;
      break;
    case 5:
      if (!srt.empty()) srt.push_back(srt[engine.below(srt.size())]);
      break;
  }
  return SortInstance{lst, srt};
}

ToposortInstance random_toposort_instance(rng::Engine& engine) {
  const Dag dag = generate_dag(engine.below(6), engine.next(), 0.4);
  std::vector<std::string> srt;
  try {
    srt = kahn_toposort(dag);
  } catch (const CycleError&) {
  }
  switch (engine.below(5)) {
    case 0:
      break;
    case 1:
      if (!srt.empty()) srt.erase(srt.begin());
      break;
    case 2:
      srt.push_back("zz");
      break;
    case 3:
      if (srt.size() >= 2) std::swap(srt.front(), srt.back());
      break;
    case 4:
      if (!srt.empty()) srt.push_back(srt[engine.below(srt.size())]);
      break;
  }
  ToposortInstance instance;
  instance.vertices = dag.vertices;
  instance.edges = dag.edges;
  instance.srt = std::move(srt);
  return instance;
}

MatchInstance random_match_instance(rng::Engine& engine) {
  const std::size_t n = engine.below(4);
  MatchInstance instance{generate_match_input(n, engine.next()), {}};
  const std::size_t pairs = engine.below(n + 2);
  for (std::size_t i = 0; i < pairs; ++i) {
    instance.match.insert({static_cast<int>(engine.below(std::max<std::size_t>(n, 1))),
                           static_cast<int>(engine.below(std::max<std::size_t>(n, 1)))});
  }
  if (n == 0) instance.match.clear();
  return instance;
}

}  // namespace

TEST_CASE("violated_sub_properties pins the documented instances") {
  const Person a42 = person("A", 42);
  const SortInstance len_mismatch{std::vector<Person>(4, a42),
                                  std::vector<Person>(7, a42)};
  CHECK(names(len_mismatch) == std::set<std::string>{prop::kSameSize});

  CHECK(names(SortInstance{{}, {}}).empty());

  const ToposortInstance flipped{{"a", "b"}, {{"a", "b"}}, {"b", "a"}};
  CHECK(names(flipped) == std::set<std::string>{prop::kOrdered});
}

TEST_CASE("empty violation set coincides with the reference predicate") {
  rng::Engine engine(2024);
  for (int i = 0; i < 400; ++i) {
    Instance instance;
    switch (i % 3) {
      case 0:
        instance = random_sort_instance(engine);
        break;
      case 1:
        instance = random_toposort_instance(engine);
        break;
      default:
        instance = random_match_instance(engine);
        break;
    }
    CAPTURE(instance_to_json(instance).dump());
    CHECK(violated_names(instance).empty() == reference_is_valid(instance));
  }
}

TEST_CASE("SAME-ELEMENTS refinement soundness") {
  rng::Engine engine(77);
  for (int i = 0; i < 300; ++i) {
    const std::set<std::string> violated =
        i % 2 == 0 ? names(random_sort_instance(engine))
                   : names(random_toposort_instance(engine));
    const bool same_elements = !violated.contains(prop::kSameElements);
    const bool retain = !violated.contains(prop::kRetain);
    const bool no_new = !violated.contains(prop::kNoNew);
    const bool not_disjoint = !violated.contains(prop::kNotDisjoint);

    // SAME-ELEMENTS fails exactly when a refinement does; NOT-DISJOINT
    // implies both directions.
    CHECK(!same_elements == (!retain || !no_new));
    if (!not_disjoint) {
      CHECK(!retain);
      CHECK(!no_new);
    }
  }
}

TEST_CASE("malformed match instances name the offending field") {
  MatchInstance bad_row{MatchPreferences{{{0, 0}}, {{0}}}, {}};
  CHECK_THROWS_WITH_AS(violated_sub_properties(bad_row),
                       doctest::Contains("candidate_prefs"), ValidationError);

  MatchInstance bad_pair{MatchPreferences{{{0}}, {{0}}}, {{0, 3}}};
  try {
    violated_sub_properties(bad_pair);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "match");
  }
}

TEST_CASE("toposort edges must reference declared vertices") {
  const ToposortInstance stray{{"a"}, {{"a", "b"}}, {"a"}};
  CHECK_THROWS_AS(violated_sub_properties(stray), ValidationError);
  CHECK_THROWS_AS(toposort_is_valid(stray), ValidationError);
}

TEST_CASE("instance JSON round-trips") {
  rng::Engine engine(99);
  for (int i = 0; i < 60; ++i) {
    Instance instance;
    switch (i % 3) {
      case 0:
        instance = random_sort_instance(engine);
        break;
      case 1:
        instance = random_toposort_instance(engine);
        break;
      default:
        instance = random_match_instance(engine);
        break;
    }
    const json encoded = instance_to_json(instance);
    CHECK(instance_from_json(encoded) == instance);
    CHECK(json::parse(encoded.dump()) == encoded);
  }
}

TEST_CASE("canonical person encoding") {
  const json j = person_to_json(person("A", 42));
  CHECK(j == json::parse(R"({"name":"A","age":42})"));
  CHECK(person_from_json(j) == person("A", 42));
  CHECK_THROWS_AS(person_from_json(json::parse(R"({"name":"A"})")),
                  ValidationError);
}

TEST_CASE("suite JSON round-trips and defaults toposort vertices") {
  for (const Problem problem :
       {Problem::kSort, Problem::kMatch, Problem::kToposort}) {
    for (const TestSuite& suite : build_suites(problem)) {
      CHECK(suite_from_json(suite_to_json(suite)) == suite);
    }
  }

  const json no_vertices = json::parse(
      R"({"edges":[["a","b"],["b","c"]],"srt":["a","b","c"]})");
  const auto inst =
      std::get<ToposortInstance>(instance_from_json(no_vertices));
  CHECK(inst.vertices == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("duplicate match pairs collapse on parse") {
  const json doubled = json::parse(
      R"({"candidate_prefs":[[0]],"company_prefs":[[0]],
          "match":[[0,0],[0,0],[0,0]]})");
  const auto inst = std::get<MatchInstance>(instance_from_json(doubled));
  CHECK(inst.match.size() == 1);
}

TEST_CASE("big ages survive the codec") {
  const Person methuselah = person("M", 10'000'000'000LL);
  const Person parsed = person_from_json(person_to_json(methuselah));
  CHECK(parsed.age == 10'000'000'000LL);
}
