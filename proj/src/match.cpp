#include "relacheck/match.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "relacheck/errors.hpp"
#include "relacheck/rng.hpp"

namespace relacheck {

namespace {

void validate_matrix(const std::vector<std::vector<int>>& matrix,
                     std::size_t n, const char* field) {
  if (matrix.size() != n) {
    throw ValidationError(field, "expected " + std::to_string(n) +
                                     " rows, got " +
                                     std::to_string(matrix.size()));
  }
  for (std::size_t row = 0; row < n; ++row) {
    std::vector<bool> seen(n, false);
    if (matrix[row].size() != n) {
      throw ValidationError(field,
                            "row " + std::to_string(row) + " is not length " +
                                std::to_string(n));
    }
    for (int value : matrix[row]) {
      if (value < 0 || static_cast<std::size_t>(value) >= n ||
          seen[static_cast<std::size_t>(value)]) {
        throw ValidationError(field, "row " + std::to_string(row) +
                                         " is not a permutation of 0.." +
                                         std::to_string(n - 1));
      }
      seen[static_cast<std::size_t>(value)] = true;
    }
  }
}

// rank[i][x] = position of x in row i; lower is better.
std::vector<std::vector<int>> rank_table(
    const std::vector<std::vector<int>>& prefs) {
  std::vector<std::vector<int>> rank(prefs.size(),
                                     std::vector<int>(prefs.size(), 0));
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    for (std::size_t pos = 0; pos < prefs[i].size(); ++pos) {
      rank[i][static_cast<std::size_t>(prefs[i][pos])] = static_cast<int>(pos);
    }
  }
  return rank;
}

}  // namespace

void validate_match_instance(const MatchInstance& instance) {
  const std::size_t n = instance.prefs.candidate_prefs.size();
  validate_matrix(instance.prefs.candidate_prefs, n, "candidate_prefs");
  validate_matrix(instance.prefs.company_prefs, n, "company_prefs");
  for (const auto& [c, k] : instance.match) {
    if (c < 0 || static_cast<std::size_t>(c) >= n || k < 0 ||
        static_cast<std::size_t>(k) >= n) {
      throw ValidationError("match", "pair (" + std::to_string(c) + ", " +
                                         std::to_string(k) +
                                         ") is out of range for n = " +
                                         std::to_string(n));
    }
  }
}

bool is_stable(const MatchInstance& instance) {
  validate_match_instance(instance);
  const std::size_t n = instance.prefs.size();
  const auto cand_rank = rank_table(instance.prefs.candidate_prefs);
  const auto comp_rank = rank_table(instance.prefs.company_prefs);

  std::vector<std::vector<int>> partners_of_candidate(n);
  std::vector<std::vector<int>> partners_of_company(n);
  for (const auto& [c, k] : instance.match) {
    partners_of_candidate[static_cast<std::size_t>(c)].push_back(k);
    partners_of_company[static_cast<std::size_t>(k)].push_back(c);
  }

  for (std::size_t c = 0; c < n; ++c) {
    if (partners_of_candidate[c].empty()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (partners_of_company[k].empty()) continue;
      if (instance.match.contains({static_cast<int>(c), static_cast<int>(k)}))
        continue;
      const bool candidate_prefers = std::all_of(
          partners_of_candidate[c].begin(), partners_of_candidate[c].end(),
          [&](int current) {
            return cand_rank[c][k] <
                   cand_rank[c][static_cast<std::size_t>(current)];
          });
      const bool company_prefers = std::all_of(
          partners_of_company[k].begin(), partners_of_company[k].end(),
          [&](int current) {
            return comp_rank[k][c] <
                   comp_rank[k][static_cast<std::size_t>(current)];
          });
      if (candidate_prefers && company_prefers) return false;
    }
  }
  return true;
}

bool is_unique(const MatchInstance& instance) {
  validate_match_instance(instance);
  const std::size_t n = instance.prefs.size();
  std::vector<int> candidate_degree(n, 0);
  std::vector<int> company_degree(n, 0);
  for (const auto& [c, k] : instance.match) {
    if (++candidate_degree[static_cast<std::size_t>(c)] > 1) return false;
    if (++company_degree[static_cast<std::size_t>(k)] > 1) return false;
  }
  return true;
}

bool is_complete(const MatchInstance& instance) {
  validate_match_instance(instance);
  const std::size_t n = instance.prefs.size();
  std::vector<bool> candidate_seen(n, false);
  std::vector<bool> company_seen(n, false);
  for (const auto& [c, k] : instance.match) {
    candidate_seen[static_cast<std::size_t>(c)] = true;
    company_seen[static_cast<std::size_t>(k)] = true;
  }
  const auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  return all(candidate_seen) && all(company_seen);
}

bool match_is_valid(const MatchInstance& instance) {
  return is_stable(instance) && is_unique(instance) && is_complete(instance);
}

std::set<SubProperty> violated_sub_properties(const MatchInstance& instance) {
  validate_match_instance(instance);
  std::set<SubProperty> out;
  auto flag = [&out](const char* name) {
    out.insert(SubProperty{Problem::kMatch, name});
  };
  if (!is_stable(instance)) flag(prop::kStable);
  if (!is_unique(instance)) flag(prop::kUnique);
  if (!is_complete(instance)) flag(prop::kComplete);
  return out;
}

std::set<Matching> enumerate_stable_matchings(const MatchPreferences& prefs,
                                              std::size_t bound) {
  const std::size_t n = prefs.size();
  if (n > bound) throw SizeLimitError(bound, n);
  validate_match_instance(MatchInstance{prefs, {}});

  std::vector<int> assignment(n);
  std::iota(assignment.begin(), assignment.end(), 0);
  std::set<Matching> out;
  do {
    Matching matching;
    for (std::size_t c = 0; c < n; ++c) {
      matching.insert({static_cast<int>(c), assignment[c]});
    }
    if (is_stable(MatchInstance{prefs, matching})) {
      out.insert(std::move(matching));
    }
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  if (n == 0) out.insert(Matching{});
  return out;
}

namespace {

// Lexicographic odometer over rows 1..n-1 of a preference matrix
// (row 0 stays pinned when requested). Returns false once exhausted.
bool next_matrix(std::vector<std::vector<int>>& matrix, bool pin_first_row) {
  for (std::size_t row = matrix.size(); row > (pin_first_row ? 1u : 0u);
       --row) {
    if (std::next_permutation(matrix[row - 1].begin(),
                              matrix[row - 1].end())) {
      return true;
    }
    // row wrapped back to the identity; carry into the next one
  }
  return false;
}

std::vector<std::vector<int>> identity_matrix(std::size_t n) {
  std::vector<std::vector<int>> matrix(n, std::vector<int>(n));
  for (auto& row : matrix) std::iota(row.begin(), row.end(), 0);
  return matrix;
}

}  // namespace

MatchInstance find_instance_violating_exactly(std::string_view target,
                                              int n) {
  if (n < 2 || n > 4) {
    throw ValidationError("n", "search size must be between 2 and 4");
  }
  if (target != prop::kStable && target != prop::kUnique &&
      target != prop::kComplete) {
    throw ValidationError("target",
                          "expected STABLE, UNIQUE or COMPLETE, got '" +
                              std::string(target) + "'");
  }
  const std::set<SubProperty> wanted = {
      SubProperty{Problem::kMatch, std::string(target)}};
  const auto un = static_cast<std::size_t>(n);

  std::vector<std::pair<int, int>> all_pairs;
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < n; ++k) all_pairs.emplace_back(c, k);
  }

  // Match sets ordered by size, then lexicographically by member pairs.
  std::vector<Matching> match_sets;
  const std::size_t pair_count = all_pairs.size();
  for (std::size_t size = 0; size <= un + 1; ++size) {
    std::vector<bool> choose(pair_count, false);
    std::fill(choose.begin(), choose.begin() + static_cast<long>(size), true);
    // prev_permutation walks the selection masks in lexicographic order.
    do {
      Matching matching;
      for (std::size_t i = 0; i < pair_count; ++i) {
        if (choose[i]) matching.insert(all_pairs[i]);
      }
      match_sets.push_back(std::move(matching));
    } while (std::prev_permutation(choose.begin(), choose.end()));
  }

  MatchPreferences prefs{identity_matrix(un), identity_matrix(un)};
  while (true) {
    for (const Matching& matching : match_sets) {
      const MatchInstance instance{prefs, matching};
      if (violated_sub_properties(instance) == wanted) return instance;
    }
    if (!next_matrix(prefs.company_prefs, false)) {
      prefs.company_prefs = identity_matrix(un);
      if (!next_matrix(prefs.candidate_prefs, true)) break;
    }
  }
  throw NotFoundError("no instance violating exactly " + std::string(target) +
                      " at n = " + std::to_string(n));
}

MatchPreferences generate_match_input(std::size_t n, std::uint64_t seed) {
  rng::Engine engine(rng::mix(seed, n));
  const auto random_matrix = [&engine, n]() {
    std::vector<std::vector<int>> matrix = identity_matrix(n);
    for (auto& row : matrix) engine.shuffle(row);
    return matrix;
  };
  MatchPreferences prefs;
  prefs.candidate_prefs = random_matrix();
  prefs.company_prefs = random_matrix();
  return prefs;
}

Matching gale_shapley(const MatchPreferences& prefs) {
  validate_match_instance(MatchInstance{prefs, {}});
  const std::size_t n = prefs.size();
  const auto comp_rank = rank_table(prefs.company_prefs);

  std::vector<std::size_t> next_proposal(n, 0);
  std::vector<int> company_partner(n, -1);
  std::vector<int> free_candidates(n);
  std::iota(free_candidates.rbegin(), free_candidates.rend(), 0);

  while (!free_candidates.empty()) {
    const int c = free_candidates.back();
    free_candidates.pop_back();
    const auto ci = static_cast<std::size_t>(c);
    const int k = prefs.candidate_prefs[ci][next_proposal[ci]++];
    const auto ki = static_cast<std::size_t>(k);
    if (company_partner[ki] < 0) {
      company_partner[ki] = c;
    } else if (comp_rank[ki][ci] <
               comp_rank[ki][static_cast<std::size_t>(company_partner[ki])]) {
      free_candidates.push_back(company_partner[ki]);
      company_partner[ki] = c;
    } else {
      free_candidates.push_back(c);
    }
  }

  Matching matching;
  for (std::size_t k = 0; k < n; ++k) {
    matching.insert({company_partner[k], static_cast<int>(k)});
  }
  return matching;
}

std::vector<TestSuite> build_match_suites() {
  std::vector<TestSuite> suites;

  // Mutually-opposed preferences: both perfect matchings are stable.
  const MatchPreferences crossed{{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}};
  // Everyone ranks the other side identically: one stable matching.
  const MatchPreferences uniform2{{{0, 1}, {0, 1}}, {{0, 1}, {0, 1}}};
  const MatchPreferences uniform3{{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}},
                                  {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};

  {
    TestSuite s{suite::kFunctional, {}};
    s.cases.push_back(
        TestCase{MatchInstance{uniform2, {{0, 0}, {1, 1}}}, true});
    // Doubled candidate 1, absent member 2, and (0,0) blocks: all three
    // sub-properties fail.
    s.cases.push_back(
        TestCase{MatchInstance{uniform3, {{0, 1}, {1, 0}, {1, 1}}}, false});
    suites.push_back(std::move(s));
  }

  for (const char* target :
       {prop::kStable, prop::kUnique, prop::kComplete}) {
    TestSuite s{std::string("ENFORCE-") + target, {}};
    for (int n : {2, 3}) {
      s.cases.push_back(
          TestCase{find_instance_violating_exactly(target, n), false});
    }
    suites.push_back(std::move(s));
  }

  {
    TestSuite s{suite::kRelational, {}};
    for (const Matching& matching : enumerate_stable_matchings(crossed)) {
      s.cases.push_back(TestCase{MatchInstance{crossed, matching}, true});
    }
    suites.push_back(std::move(s));
  }

  {
    TestSuite s{suite::kEdge, {}};
    s.cases.push_back(TestCase{MatchInstance{MatchPreferences{{}, {}}, {}},
                               true});
    s.cases.push_back(
        TestCase{MatchInstance{MatchPreferences{{{0}}, {{0}}}, {{0, 0}}},
                 true});
    suites.push_back(std::move(s));
  }

  return suites;
}

}  // namespace relacheck
