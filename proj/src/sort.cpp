#include "relacheck/sort.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "relacheck/errors.hpp"
#include "relacheck/rng.hpp"

namespace relacheck {

namespace {

std::vector<Person> sorted_copy(const std::vector<Person>& people) {
  std::vector<Person> out = people;
  std::sort(out.begin(), out.end());
  return out;
}

std::set<Person> identity_set(const std::vector<Person>& people) {
  return {people.begin(), people.end()};
}

bool ages_non_decreasing(const std::vector<Person>& people) {
  return std::is_sorted(people.begin(), people.end(),
                        [](const Person& a, const Person& b) {
                          return a.age < b.age;
                        });
}

bool subset(const std::set<Person>& a, const std::set<Person>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::set<Person>& a, const std::set<Person>& b) {
  std::vector<Person> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(shared));
  return shared.empty();
}

}  // namespace

bool sort_is_valid(const std::vector<Person>& lst,
                   const std::vector<Person>& srt) {
  return lst.size() == srt.size() && sorted_copy(lst) == sorted_copy(srt) &&
         ages_non_decreasing(srt);
}

// Attribution semantics for the SAME-ELEMENTS family. Identities are full
// (name, age) pairs. A size mismatch is charged to SAME-SIZE alone, so
// SAME-ELEMENTS compares identity sets, plus multiplicities when the sizes
// agree (n copies vs m copies of one person is a pure SAME-SIZE failure).
// A multiplicity mismatch at equal sizes and equal identity sets means a
// copy of someone was dropped, which is a retention failure; no new
// identity appeared, so NO-NEW stays satisfied. This keeps SAME-ELEMENTS
// equivalent to RETAIN ∧ NO-NEW on every instance.
std::set<SubProperty> violated_sub_properties(const SortInstance& instance) {
  const auto& lst = instance.lst;
  const auto& srt = instance.srt;

  const bool same_size = lst.size() == srt.size();
  const bool multisets_equal = sorted_copy(lst) == sorted_copy(srt);
  const std::set<Person> lset = identity_set(lst);
  const std::set<Person> sset = identity_set(srt);
  const bool sets_equal = lset == sset;

  const bool multiplicity_drift = sets_equal && same_size && !multisets_equal;
  const bool retain_ok = subset(lset, sset) && !multiplicity_drift;
  const bool no_new_ok = subset(sset, lset);
  const bool not_disjoint_ok =
      lst.empty() || srt.empty() || !disjoint(lset, sset);
  const bool same_elements_ok = sets_equal && (!same_size || multisets_equal);

  std::set<SubProperty> out;
  auto flag = [&out](const char* name) {
    out.insert(SubProperty{Problem::kSort, name});
  };
  if (!same_size) flag(prop::kSameSize);
  if (!same_elements_ok) flag(prop::kSameElements);
  if (!retain_ok) flag(prop::kRetain);
  if (!no_new_ok) flag(prop::kNoNew);
  if (!not_disjoint_ok) flag(prop::kNotDisjoint);
  if (!ages_non_decreasing(srt)) flag(prop::kOrdered);
  return out;
}

std::set<std::vector<Person>> enumerate_valid_sorts(
    const std::vector<Person>& lst, std::size_t bound) {
  if (lst.size() > bound) throw SizeLimitError(bound, lst.size());

  // Group into equal-age blocks, then take the cartesian product of each
  // block's distinct arrangements. next_permutation from a sorted start
  // visits every distinct arrangement exactly once, duplicates included.
  std::map<std::int64_t, std::vector<Person>> blocks;
  for (const Person& p : lst) blocks[p.age].push_back(p);

  std::vector<std::vector<std::vector<Person>>> block_arrangements;
  for (auto& [age, members] : blocks) {
    std::sort(members.begin(), members.end());
    std::vector<std::vector<Person>> arrangements;
    std::vector<Person> current = members;
    do {
      arrangements.push_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    block_arrangements.push_back(std::move(arrangements));
  }

  std::set<std::vector<Person>> out;
  std::vector<std::size_t> pick(block_arrangements.size(), 0);
  while (true) {
    std::vector<Person> candidate;
    for (std::size_t b = 0; b < block_arrangements.size(); ++b) {
      const auto& arrangement = block_arrangements[b][pick[b]];
      candidate.insert(candidate.end(), arrangement.begin(), arrangement.end());
    }
    out.insert(std::move(candidate));

    std::size_t b = 0;
    while (b < pick.size()) {
      if (++pick[b] < block_arrangements[b].size()) break;
      pick[b] = 0;
      ++b;
    }
    if (b == pick.size()) break;
  }
  return out;
}

std::vector<Person> generate_sort_input(std::size_t n, std::uint64_t seed) {
  static constexpr char kNames[] = "ABCDEFGHIJ";
  rng::Engine engine(rng::mix(seed, n));
  std::vector<Person> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Person p;
    p.name = std::string(1, kNames[engine.below(sizeof(kNames) - 1)]);
    p.age = static_cast<std::int64_t>(engine.below(n + 1));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Person> sort_by_age(std::vector<Person> people) {
  std::stable_sort(people.begin(), people.end(),
                   [](const Person& a, const Person& b) {
                     return a.age < b.age;
                   });
  return people;
}

namespace {

Person person(const char* name, std::int64_t age) {
  return Person{name, age};
}

TestCase invalid(std::vector<Person> lst, std::vector<Person> srt) {
  return TestCase{SortInstance{std::move(lst), std::move(srt)}, false};
}

TestCase valid(std::vector<Person> lst, std::vector<Person> srt) {
  return TestCase{SortInstance{std::move(lst), std::move(srt)}, true};
}

}  // namespace

std::vector<TestSuite> build_sort_suites() {
  std::vector<TestSuite> suites;

  const Person a1 = person("A", 1);
  const Person a2 = person("A", 2);
  const Person b1 = person("B", 1);
  const Person b2 = person("B", 2);
  const Person c2 = person("C", 2);
  const Person c3 = person("C", 3);

  // FUNCTIONAL: one uniquely-valid pair and one pair violating every
  // top-level sub-property. Deliberately no small inputs here; EDGE owns
  // those so the sub-property suites reflect reasoning, not edge handling.
  {
    TestSuite functional{suite::kFunctional, {}};
    const std::vector<Person> scrambled = {person("E", 9), person("B", 3),
                                           person("D", 7), person("A", 1),
                                           person("C", 5)};
    const std::vector<Person> sorted = {person("A", 1), person("B", 3),
                                        person("C", 5), person("D", 7),
                                        person("E", 9)};
    functional.cases.push_back(valid(scrambled, sorted));
    functional.cases.push_back(invalid({a1, b2, c3},
                                       {person("E", 9), person("D", 5)}));
    suites.push_back(std::move(functional));
  }

  // ENFORCE-SAME-SIZE: equal identity sets and ordered output, sizes apart.
  {
    TestSuite s{suite::kEnforceSameSize, {}};
    const Person a42 = person("A", 42);
    const std::vector<Person> len4(4, a42);
    const std::vector<Person> len7(7, a42);
    s.cases.push_back(invalid(len4, len7));
    s.cases.push_back(invalid(len7, len4));
    s.cases.push_back(invalid({b1, c2}, {b1, c2, c2}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-SAME-ELEMENTS: identity sets differ, sizes equal, srt ordered.
  // Covers each containment direction separately and a two-sided swap.
  {
    TestSuite s{suite::kEnforceSameElements, {}};
    s.cases.push_back(invalid({a1, b2}, {a1, a1}));      // B@2 dropped
    s.cases.push_back(invalid({a1, a1}, {a1, b2}));      // B@2 invented
    s.cases.push_back(invalid({a1, b2}, {a1, c2}));      // swapped identity
    suites.push_back(std::move(s));
  }

  // ENFORCE-RETAIN: an lst member is missing from srt while srt introduces
  // nothing new. Variants lose a person differing from a kept one in only
  // one respect.
  {
    TestSuite s{suite::kEnforceRetain, {}};
    s.cases.push_back(invalid({a1, a2}, {a1, a1}));            // age variant
    s.cases.push_back(invalid({a1, b1}, {a1, a1}));            // name variant
    s.cases.push_back(invalid({a1, b2, c3}, {a1, a1, c3}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-NO-NEW: srt contains an identity absent from lst while every
  // lst identity survives.
  {
    TestSuite s{suite::kEnforceNoNew, {}};
    s.cases.push_back(invalid({a1, a1}, {a1, a2}));            // age variant
    s.cases.push_back(invalid({a1, a1}, {a1, b1}));            // name variant
    s.cases.push_back(invalid({a1, b2, b2}, {a1, b2, person("D", 7)}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-NOT-DISJOINT: equal sizes, ordered, zero shared identities.
  // Catches validators that reduce element equality to a length check.
  {
    TestSuite s{suite::kEnforceNotDisjoint, {}};
    s.cases.push_back(invalid({a1, b2}, {c3, person("D", 4)}));
    s.cases.push_back(invalid({a1}, {a2}));
    s.cases.push_back(invalid({person("A", 5)}, {person("B", 5)}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-ORDERED: a true permutation of lst, out of age order.
  {
    TestSuite s{suite::kEnforceOrdered, {}};
    s.cases.push_back(invalid({a1, b2}, {b2, a1}));
    s.cases.push_back(invalid({a1, b2, c3}, {a1, c3, b2}));
    suites.push_back(std::move(s));
  }

  // RELATIONAL: every valid ordering of one tied-age input.
  {
    TestSuite s{suite::kRelational, {}};
    const std::vector<Person> tied = {person("C", 1), person("A", 3),
                                      person("B", 3)};
    for (const auto& ordering : enumerate_valid_sorts(tied)) {
      s.cases.push_back(valid(tied, ordering));
    }
    suites.push_back(std::move(s));
  }

  // EDGE: input-size edge cases, all valid.
  {
    TestSuite s{suite::kEdge, {}};
    s.cases.push_back(valid({}, {}));
    s.cases.push_back(valid({a1}, {a1}));
    suites.push_back(std::move(s));
  }

  // OVERREACH: valid pairs that trip validators superimposing real-world
  // age limits the problem never states.
  {
    TestSuite s{suite::kOverreachNegativeAge, {}};
    const Person debtor = person("N", -5);
    s.cases.push_back(valid({person("A", 3), debtor}, {debtor, person("A", 3)}));
    s.cases.push_back(valid({person("X", -1)}, {person("X", -1)}));
    suites.push_back(std::move(s));
  }
  {
    TestSuite s{suite::kOverreachOldAge, {}};
    const Person methuselah = person("M", 10'000'000'000LL);
    s.cases.push_back(
        valid({methuselah, person("A", 3)}, {person("A", 3), methuselah}));
    s.cases.push_back(valid({person("O", 1001)}, {person("O", 1001)}));
    suites.push_back(std::move(s));
  }

  return suites;
}

}  // namespace relacheck
