#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "relacheck/domain.hpp"

namespace relacheck {

inline constexpr std::size_t kSortEnumerationBound = 6;

// True iff srt is lst sorted ascending by age: same size, same (name, age)
// multiset, ages non-decreasing. Order among equal ages is free; a stable
// sort is not required.
bool sort_is_valid(const std::vector<Person>& lst,
                   const std::vector<Person>& srt);

// All sequences p with sort_is_valid(lst, p), i.e. every ordering reachable
// by permuting within equal-age blocks, deduplicated by (name, age) values.
// Throws SizeLimitError when |lst| exceeds the bound.
std::set<std::vector<Person>> enumerate_valid_sorts(
    const std::vector<Person>& lst,
    std::size_t bound = kSortEnumerationBound);

// Deterministic in (n, seed). Ages are drawn from [0, n] so duplicate ages
// show up routinely from n >= 4; names come from a small letter pool.
std::vector<Person> generate_sort_input(std::size_t n, std::uint64_t seed);

// Stable comparator sort by age; the canonical single answer used by the
// exact-equality mutant and implementation checks.
std::vector<Person> sort_by_age(std::vector<Person> people);

// FUNCTIONAL, the ENFORCE-* suites (with SAME-ELEMENTS refinements),
// RELATIONAL, EDGE and the two OVERREACH suites.
std::vector<TestSuite> build_sort_suites();

}  // namespace relacheck
