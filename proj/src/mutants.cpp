#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "relacheck/errors.hpp"
#include "relacheck/harness.hpp"
#include "relacheck/match.hpp"
#include "relacheck/sort.hpp"
#include "relacheck/toposort.hpp"

// The built-in mutant validators. Each models one recurring failure mode
// of hand-written validity predicates, coded the way the buggy checker
// would be: a correct-looking conjunction with one conjunct missing, one
// direction unchecked, or one unstated assumption baked in.

namespace relacheck {

namespace {

bool same_size(const SortInstance& in) {
  return in.lst.size() == in.srt.size();
}

bool ages_sorted(const std::vector<Person>& people) {
  return std::is_sorted(
      people.begin(), people.end(),
      [](const Person& a, const Person& b) { return a.age < b.age; });
}

bool members_of(const std::vector<Person>& subject,
                const std::vector<Person>& pool) {
  const std::set<Person> lookup(pool.begin(), pool.end());
  return std::all_of(subject.begin(), subject.end(),
                     [&lookup](const Person& p) { return lookup.contains(p); });
}

// --- sort mutants ---

// Compares against the one canonical answer of the provided sorter, so any
// other valid ordering of tied ages is refused.
bool sort_exact_equality(const SortInstance& in) {
  return sort_by_age(in.lst) == in.srt;
}

// Checks that srt introduces nothing new but never that lst survived.
bool sort_one_sided_retain(const SortInstance& in) {
  return same_size(in) && members_of(in.srt, in.lst) && ages_sorted(in.srt);
}

// Checks that lst survived but never that srt is free of inventions.
bool sort_one_sided_no_new(const SortInstance& in) {
  return same_size(in) && members_of(in.lst, in.srt) && ages_sorted(in.srt);
}

// "Same elements" approximated by "same number of elements".
bool sort_length_only(const SortInstance& in) {
  return same_size(in) && ages_sorted(in.srt);
}

// Correct, except a list containing a negative age is refused — the
// min-of-empty-list-is-negative shortcut leaking into validation.
bool sort_negative_age_rejector(const SortInstance& in) {
  const auto negative = [](const Person& p) { return p.age < 0; };
  if (std::any_of(in.lst.begin(), in.lst.end(), negative) ||
      std::any_of(in.srt.begin(), in.srt.end(), negative)) {
    return false;
  }
  return sort_is_valid(in.lst, in.srt);
}

// Correct, except nobody may be older than 1000 — the max-of-empty-list
// sentinel treated as a real bound.
bool sort_max_age_shortcut(const SortInstance& in) {
  const auto ancient = [](const Person& p) { return p.age > 1000; };
  if (std::any_of(in.lst.begin(), in.lst.end(), ancient) ||
      std::any_of(in.srt.begin(), in.srt.end(), ancient)) {
    return false;
  }
  return sort_is_valid(in.lst, in.srt);
}

bool sort_empty_crasher(const SortInstance& in) {
  if (in.lst.empty() || in.srt.empty()) {
    throw std::out_of_range("index 0 out of range");
  }
  return sort_is_valid(in.lst, in.srt);
}

// --- match mutants ---

bool match_ignore_stability(const MatchInstance& in) {
  return is_unique(in) && is_complete(in);
}

bool match_ignore_completeness(const MatchInstance& in) {
  return is_stable(in) && is_unique(in);
}

bool match_empty_crasher(const MatchInstance& in) {
  if (in.prefs.size() == 0) throw std::out_of_range("no preferences");
  return match_is_valid(in);
}

// --- toposort mutants ---

std::set<std::string> vertex_set(const std::vector<std::string>& vs) {
  return {vs.begin(), vs.end()};
}

bool topo_no_duplicates(const std::vector<std::string>& srt) {
  return std::set<std::string>(srt.begin(), srt.end()).size() == srt.size();
}

bool topo_edges_ok(const ToposortInstance& in) {
  std::map<std::string, std::size_t> first_pos, last_pos;
  for (std::size_t i = 0; i < in.srt.size(); ++i) {
    if (!first_pos.contains(in.srt[i])) first_pos[in.srt[i]] = i;
    last_pos[in.srt[i]] = i;
  }
  for (const auto& [u, v] : in.edges) {
    auto a = last_pos.find(u);
    auto b = first_pos.find(v);
    if (a != last_pos.end() && b != first_pos.end() && a->second >= b->second) {
      return false;
    }
  }
  return true;
}

bool topo_one_sided_retain(const ToposortInstance& in) {
  const auto vset = vertex_set(in.vertices);
  const bool no_new = std::all_of(
      in.srt.begin(), in.srt.end(),
      [&vset](const std::string& v) { return vset.contains(v); });
  return no_new && topo_no_duplicates(in.srt) && topo_edges_ok(in);
}

bool topo_one_sided_no_new(const ToposortInstance& in) {
  const auto sset = vertex_set(in.srt);
  const bool retained = std::all_of(
      in.vertices.begin(), in.vertices.end(),
      [&sset](const std::string& v) { return sset.contains(v); });
  return retained && topo_no_duplicates(in.srt) && topo_edges_ok(in);
}

bool topo_length_only(const ToposortInstance& in) {
  return vertex_set(in.vertices).size() == in.srt.size() &&
         topo_no_duplicates(in.srt) && topo_edges_ok(in);
}

bool topo_no_dup_blind(const ToposortInstance& in) {
  return vertex_set(in.vertices) == vertex_set(in.srt) && topo_edges_ok(in);
}

bool topo_empty_crasher(const ToposortInstance& in) {
  if (in.vertices.empty()) throw std::out_of_range("no vertices");
  return toposort_is_valid(in);
}

// --- registry ---

template <typename T, typename Fn>
std::function<bool(const Instance&)> on(Fn fn) {
  return [fn](const Instance& instance) { return fn(std::get<T>(instance)); };
}

struct MutantDef {
  MutantSpec spec;
  std::function<bool(const Instance&)> fn;
};

std::vector<MutantDef> make_sort_mutants() {
  using S = SortInstance;
  std::vector<MutantDef> defs;
  defs.push_back(
      {{"exact-reference-equality", Problem::kSort,
        "accepts only the canonical sorted order, refusing other valid "
        "orderings of tied ages",
        {suite::kRelational}},
       on<S>(sort_exact_equality)});
  defs.push_back(
      {{"one-sided-retain", Problem::kSort,
        "never notices input elements missing from the output",
        {suite::kEnforceSameElements, suite::kEnforceRetain}},
       on<S>(sort_one_sided_retain)});
  defs.push_back(
      {{"one-sided-no-new", Problem::kSort,
        "never notices invented elements in the output",
        {suite::kEnforceSameElements, suite::kEnforceNoNew}},
       on<S>(sort_one_sided_no_new)});
  defs.push_back(
      {{"length-only-elements", Problem::kSort,
        "compares element counts instead of element identities",
        {suite::kEnforceSameElements, suite::kEnforceRetain,
         suite::kEnforceNoNew, suite::kEnforceNotDisjoint}},
       on<S>(sort_length_only)});
  defs.push_back({{"always-true", Problem::kSort,
                   "accepts everything",
                   {suite::kEnforceSameSize, suite::kEnforceSameElements,
                    suite::kEnforceRetain, suite::kEnforceNoNew,
                    suite::kEnforceNotDisjoint, suite::kEnforceOrdered,
                    suite::kFunctional}},
                  [](const Instance&) { return true; }});
  defs.push_back({{"always-false", Problem::kSort,
                   "rejects everything",
                   {suite::kRelational, suite::kFunctional, suite::kEdge,
                    suite::kOverreachNegativeAge, suite::kOverreachOldAge}},
                  [](const Instance&) { return false; }});
  defs.push_back(
      {{"negative-age-rejector", Problem::kSort,
        "refuses otherwise-valid lists containing a negative age",
        {suite::kOverreachNegativeAge}},
       on<S>(sort_negative_age_rejector)});
  defs.push_back(
      {{"max-age-shortcut", Problem::kSort,
        "refuses otherwise-valid lists with anyone older than 1000",
        {suite::kOverreachOldAge}},
       on<S>(sort_max_age_shortcut)});
  defs.push_back({{"empty-input-crasher", Problem::kSort,
                   "throws when either list is empty",
                   {suite::kEdge}},
                  on<S>(sort_empty_crasher)});
  return defs;
}

std::vector<MutantDef> make_match_mutants() {
  using M = MatchInstance;
  std::vector<MutantDef> defs;
  defs.push_back({{"ignore-stability", Problem::kMatch,
                   "checks UNIQUE and COMPLETE but never looks for a "
                   "blocking pair",
                   {suite::kEnforceStable}},
                  on<M>(match_ignore_stability)});
  defs.push_back({{"ignore-completeness", Problem::kMatch,
                   "checks STABLE and UNIQUE but not that everyone is "
                   "represented",
                   {suite::kEnforceComplete}},
                  on<M>(match_ignore_completeness)});
  defs.push_back({{"always-true", Problem::kMatch,
                   "accepts everything",
                   {suite::kEnforceStable, suite::kEnforceUnique,
                    suite::kEnforceComplete, suite::kFunctional}},
                  [](const Instance&) { return true; }});
  defs.push_back({{"always-false", Problem::kMatch,
                   "rejects everything",
                   {suite::kRelational, suite::kFunctional, suite::kEdge}},
                  [](const Instance&) { return false; }});
  defs.push_back({{"empty-input-crasher", Problem::kMatch,
                   "throws on zero-size preference matrices",
                   {suite::kEdge}},
                  on<M>(match_empty_crasher)});
  return defs;
}

std::vector<MutantDef> make_toposort_mutants() {
  using T = ToposortInstance;
  std::vector<MutantDef> defs;
  defs.push_back(
      {{"one-sided-retain", Problem::kToposort,
        "never notices dag vertices omitted from the output",
        {suite::kEnforceSameElements, suite::kEnforceRetain}},
       on<T>(topo_one_sided_retain)});
  defs.push_back(
      {{"one-sided-no-new", Problem::kToposort,
        "never notices invented vertices in the output",
        {suite::kEnforceSameElements, suite::kEnforceNoNew}},
       on<T>(topo_one_sided_no_new)});
  defs.push_back(
      {{"length-only-elements", Problem::kToposort,
        "compares vertex counts instead of vertex identities",
        {suite::kEnforceSameElements, suite::kEnforceNotDisjoint}},
       on<T>(topo_length_only)});
  defs.push_back({{"no-dup-blind", Problem::kToposort,
                   "checks SAME-ELEMENTS and ORDERED over sets, so "
                   "duplicated vertices slip through",
                   {suite::kEnforceNoDups}},
                  on<T>(topo_no_dup_blind)});
  defs.push_back({{"always-true", Problem::kToposort,
                   "accepts everything",
                   {suite::kEnforceSameElements, suite::kEnforceRetain,
                    suite::kEnforceNoNew, suite::kEnforceNotDisjoint,
                    suite::kEnforceOrdered, suite::kEnforceNoDups,
                    suite::kFunctional}},
                  [](const Instance&) { return true; }});
  defs.push_back({{"always-false", Problem::kToposort,
                   "rejects everything",
                   {suite::kRelational, suite::kFunctional, suite::kEdge}},
                  [](const Instance&) { return false; }});
  defs.push_back({{"empty-input-crasher", Problem::kToposort,
                   "throws on the empty graph",
                   {suite::kEdge}},
                  on<T>(topo_empty_crasher)});
  return defs;
}

const std::vector<MutantDef>& mutant_defs(Problem problem) {
  static const std::vector<MutantDef> sort_defs = make_sort_mutants();
  static const std::vector<MutantDef> match_defs = make_match_mutants();
  static const std::vector<MutantDef> topo_defs = make_toposort_mutants();
  switch (problem) {
    case Problem::kSort:
      return sort_defs;
    case Problem::kMatch:
      return match_defs;
    case Problem::kToposort:
      return topo_defs;
  }
  return sort_defs;
}

}  // namespace

const std::vector<MutantSpec>& mutant_corpus(Problem problem) {
  static const auto build = [](Problem p) {
    std::vector<MutantSpec> specs;
    for (const MutantDef& def : mutant_defs(p)) specs.push_back(def.spec);
    return specs;
  };
  static const std::vector<MutantSpec> sort_specs = build(Problem::kSort);
  static const std::vector<MutantSpec> match_specs = build(Problem::kMatch);
  static const std::vector<MutantSpec> topo_specs = build(Problem::kToposort);
  switch (problem) {
    case Problem::kSort:
      return sort_specs;
    case Problem::kMatch:
      return match_specs;
    case Problem::kToposort:
      return topo_specs;
  }
  return sort_specs;
}

bool mutant_is_valid(Problem problem, std::string_view mutant_name,
                     const Instance& instance) {
  for (const MutantDef& def : mutant_defs(problem)) {
    if (def.spec.name == mutant_name) return def.fn(instance);
  }
  throw ValidationError("mutant",
                        "no mutant named '" + std::string(mutant_name) +
                            "' for problem " +
                            std::string(problem_name(problem)));
}

}  // namespace relacheck
