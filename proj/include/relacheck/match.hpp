#pragma once

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "relacheck/domain.hpp"

namespace relacheck {

inline constexpr std::size_t kMatchEnumerationBound = 6;

// Checks that both matrices are n x n row-permutations of 0..n-1 and that
// every match pair indexes into 0..n-1. Throws ValidationError naming the
// offending field.
void validate_match_instance(const MatchInstance& instance);

// STABLE: no blocking pair. Quantifies only over members represented in
// the match; with multiple partners, "prefers" means preferred to every
// current partner, so the predicate stays defined on UNIQUE-violating
// instances.
bool is_stable(const MatchInstance& instance);

// UNIQUE: no candidate or company occurs in more than one pair.
bool is_unique(const MatchInstance& instance);

// COMPLETE: every candidate and company occurs in at least one pair.
bool is_complete(const MatchInstance& instance);

// STABLE ∧ UNIQUE ∧ COMPLETE.
bool match_is_valid(const MatchInstance& instance);

// Exactly the perfect matchings that are stable, by exhausting all n!
// of them. Throws SizeLimitError above the bound.
std::set<Matching> enumerate_stable_matchings(
    const MatchPreferences& prefs, std::size_t bound = kMatchEnumerationBound);

// Deterministic bounded search for an instance whose violated
// sub-properties are exactly {target}, target one of STABLE, UNIQUE or
// COMPLETE. Enumerates preference matrices (candidate row 0 pinned to the
// identity permutation; sub-property violations are invariant under
// company relabeling, so the pruning loses no witnesses) and match sets of
// size <= n+1, returning the first hit. Requires 2 <= n <= 4; throws
// NotFoundError on exhaustion.
MatchInstance find_instance_violating_exactly(std::string_view target, int n);

// Deterministic in (n, seed); every row an independent uniform permutation.
MatchPreferences generate_match_input(std::size_t n, std::uint64_t seed);

// Candidate-proposing deferred acceptance; the demo subject for
// implementation checks.
Matching gale_shapley(const MatchPreferences& prefs);

std::vector<TestSuite> build_match_suites();

}  // namespace relacheck
