#include "relacheck/toposort.hpp"

#include <algorithm>
#include <iterator>
#include <map>

#include "relacheck/errors.hpp"
#include "relacheck/rng.hpp"

namespace relacheck {

namespace {

using Edge = std::pair<std::string, std::string>;

void validate_edges(const std::vector<std::string>& vertices,
                    const std::vector<Edge>& edges) {
  const std::set<std::string> vset(vertices.begin(), vertices.end());
  for (const Edge& e : edges) {
    if (!vset.contains(e.first) || !vset.contains(e.second)) {
      throw ValidationError("edges", "edge (" + e.first + ", " + e.second +
                                         ") references an undeclared vertex");
    }
  }
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::vector<std::string> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(shared));
  return shared.empty();
}

// ORDERED must stay well-defined when srt repeats vertices, so an edge
// (u, v) demands that every occurrence of u precedes every occurrence
// of v; endpoints absent from srt impose nothing.
bool edges_respected(const std::vector<Edge>& edges,
                     const std::vector<std::string>& srt) {
  std::map<std::string, std::size_t> first_pos;
  std::map<std::string, std::size_t> last_pos;
  for (std::size_t i = 0; i < srt.size(); ++i) {
    if (!first_pos.contains(srt[i])) first_pos[srt[i]] = i;
    last_pos[srt[i]] = i;
  }
  for (const Edge& e : edges) {
    auto u = last_pos.find(e.first);
    auto v = first_pos.find(e.second);
    if (u != last_pos.end() && v != first_pos.end() && u->second >= v->second) {
      return false;
    }
  }
  return true;
}

bool has_duplicates(const std::vector<std::string>& srt) {
  std::set<std::string> seen;
  for (const std::string& v : srt) {
    if (!seen.insert(v).second) return true;
  }
  return false;
}

}  // namespace

bool toposort_is_valid(const ToposortInstance& instance) {
  validate_edges(instance.vertices, instance.edges);
  const std::set<std::string> vset(instance.vertices.begin(),
                                   instance.vertices.end());
  const std::set<std::string> sset(instance.srt.begin(), instance.srt.end());
  return vset == sset && !has_duplicates(instance.srt) &&
         edges_respected(instance.edges, instance.srt);
}

std::set<SubProperty> violated_sub_properties(
    const ToposortInstance& instance) {
  validate_edges(instance.vertices, instance.edges);
  const std::set<std::string> vset(instance.vertices.begin(),
                                   instance.vertices.end());
  const std::set<std::string> sset(instance.srt.begin(), instance.srt.end());

  std::set<SubProperty> out;
  auto flag = [&out](const char* name) {
    out.insert(SubProperty{Problem::kToposort, name});
  };
  if (vset != sset) flag(prop::kSameElements);
  if (!subset(vset, sset)) flag(prop::kRetain);
  if (!subset(sset, vset)) flag(prop::kNoNew);
  if (!vset.empty() && !sset.empty() && disjoint(vset, sset)) {
    flag(prop::kNotDisjoint);
  }
  if (!edges_respected(instance.edges, instance.srt)) flag(prop::kOrdered);
  if (has_duplicates(instance.srt)) flag(prop::kNoDups);
  return out;
}

namespace {

struct EnumState {
  std::vector<std::string> order;          // ascending; positions are ids
  std::vector<std::vector<std::size_t>> successors;
  std::vector<int> indegree;
  std::vector<bool> used;
  std::vector<std::string> path;
  std::set<std::vector<std::string>>* out = nullptr;

  void expand() {
    if (path.size() == order.size()) {
      out->insert(path);
      return;
    }
    for (std::size_t v = 0; v < order.size(); ++v) {
      if (used[v] || indegree[v] != 0) continue;
      used[v] = true;
      for (std::size_t w : successors[v]) --indegree[w];
      path.push_back(order[v]);
      expand();
      path.pop_back();
      for (std::size_t w : successors[v]) ++indegree[w];
      used[v] = false;
    }
  }
};

// Walks predecessor links inside the unresolved set until a vertex
// repeats; every unresolved vertex has an unresolved predecessor, so the
// walk must close a cycle.
[[noreturn]] void report_cycle(
    const std::vector<std::string>& order,
    const std::vector<std::vector<std::size_t>>& successors,
    const std::vector<bool>& resolved) {
  std::vector<std::vector<std::size_t>> predecessors(order.size());
  for (std::size_t u = 0; u < order.size(); ++u) {
    for (std::size_t w : successors[u]) predecessors[w].push_back(u);
  }
  std::size_t start = 0;
  while (start < order.size() && resolved[start]) ++start;

  std::vector<std::size_t> trail;
  std::vector<int> seen_at(order.size(), -1);
  std::size_t v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(trail.size());
    trail.push_back(v);
    for (std::size_t p : predecessors[v]) {
      if (!resolved[p]) {
        v = p;
        break;
      }
    }
  }
  std::string msg = "cycle detected: ";
  for (std::size_t i = trail.size(); i > static_cast<std::size_t>(seen_at[v]);
       --i) {
    msg += order[trail[i - 1]] + " -> ";
  }
  msg += order[v];
  throw CycleError(msg);
}

}  // namespace

std::set<std::vector<std::string>> enumerate_topological_orders(
    const std::vector<std::string>& vertices,
    const std::vector<Edge>& edges, std::size_t bound) {
  validate_edges(vertices, edges);
  const std::set<std::string> vset(vertices.begin(), vertices.end());
  if (vset.size() > bound) throw SizeLimitError(bound, vset.size());

  EnumState state;
  state.order.assign(vset.begin(), vset.end());
  const std::size_t n = state.order.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[state.order[i]] = i;

  const std::set<Edge> unique_edges(edges.begin(), edges.end());
  state.successors.resize(n);
  state.indegree.assign(n, 0);
  for (const Edge& e : unique_edges) {
    state.successors[index[e.first]].push_back(index[e.second]);
    ++state.indegree[index[e.second]];
  }

  // Greedy elimination proves acyclicity before the enumeration starts.
  {
    std::vector<int> degree = state.indegree;
    std::vector<bool> resolved(n, false);
    std::size_t eliminated = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (resolved[v] || degree[v] != 0) continue;
        resolved[v] = true;
        ++eliminated;
        for (std::size_t w : state.successors[v]) --degree[w];
        progress = true;
      }
    }
    if (eliminated != n) report_cycle(state.order, state.successors, resolved);
  }

  std::set<std::vector<std::string>> out;
  state.used.assign(n, false);
  state.out = &out;
  state.expand();
  return out;
}

Dag generate_dag(std::size_t n, std::uint64_t seed, double edge_probability) {
  rng::Engine engine(rng::mix(seed, n));
  Dag dag;
  dag.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    dag.vertices.push_back("v" + std::to_string(i));
  }
  std::vector<std::string> pi = dag.vertices;
  engine.shuffle(pi);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (engine.bernoulli(edge_probability)) {
        dag.edges.emplace_back(pi[i], pi[j]);
      }
    }
  }
  return dag;
}

std::vector<std::string> kahn_toposort(const Dag& dag) {
  validate_edges(dag.vertices, dag.edges);
  const std::set<std::string> vset(dag.vertices.begin(), dag.vertices.end());
  std::map<std::string, int> indegree;
  std::map<std::string, std::set<std::string>> successors;
  for (const std::string& v : vset) indegree[v] = 0;
  for (const Edge& e : std::set<Edge>(dag.edges.begin(), dag.edges.end())) {
    if (successors[e.first].insert(e.second).second) ++indegree[e.second];
  }

  std::set<std::string> ready;
  for (const auto& [v, d] : indegree) {
    if (d == 0) ready.insert(v);
  }
  std::vector<std::string> out;
  while (!ready.empty()) {
    const std::string v = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(v);
    for (const std::string& w : successors[v]) {
      if (--indegree[w] == 0) ready.insert(w);
    }
  }
  if (out.size() != vset.size()) {
    throw CycleError("cycle detected: graph has no topological order");
  }
  return out;
}

namespace {

TestCase invalid(ToposortInstance instance) {
  return TestCase{std::move(instance), false};
}

TestCase valid(ToposortInstance instance) {
  return TestCase{std::move(instance), true};
}

}  // namespace

std::vector<TestSuite> build_toposort_suites() {
  std::vector<TestSuite> suites;

  const std::vector<std::string> ab = {"a", "b"};
  const std::vector<std::string> abc = {"a", "b", "c"};
  const std::vector<Edge> edge_ab = {{"a", "b"}};
  const std::vector<Edge> chain = {{"a", "b"}, {"b", "c"}};

  // FUNCTIONAL: a chain admits exactly one order; the rejected case breaks
  // SAME-ELEMENTS, ORDERED and NO-DUPS at once.
  {
    TestSuite s{suite::kFunctional, {}};
    s.cases.push_back(valid({abc, chain, {"a", "b", "c"}}));
    s.cases.push_back(invalid({abc, chain, {"c", "b", "b"}}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-SAME-ELEMENTS: vertex sets differ, order and uniqueness intact.
  {
    TestSuite s{suite::kEnforceSameElements, {}};
    s.cases.push_back(invalid({abc, edge_ab, {"a", "b"}}));       // c dropped
    s.cases.push_back(invalid({ab, edge_ab, {"a", "b", "z"}}));   // z invented
    s.cases.push_back(invalid({abc, edge_ab, {"a", "b", "d"}}));  // c -> d
    suites.push_back(std::move(s));
  }

  // ENFORCE-RETAIN: all of srt is in the dag, yet a dag vertex is missing.
  {
    TestSuite s{suite::kEnforceRetain, {}};
    s.cases.push_back(invalid({abc, edge_ab, {"a", "b"}}));
    s.cases.push_back(invalid({abc, {{"a", "c"}}, {"a", "c"}}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-NO-NEW: all dag vertices appear, plus an invented one.
  {
    TestSuite s{suite::kEnforceNoNew, {}};
    s.cases.push_back(invalid({ab, edge_ab, {"a", "b", "z"}}));
    s.cases.push_back(invalid({{"a"}, {}, {"a", "q"}}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-NOT-DISJOINT: same vertex count, completely disjoint
  // identities; the detector for length-based element checks.
  {
    TestSuite s{suite::kEnforceNotDisjoint, {}};
    s.cases.push_back(invalid({ab, edge_ab, {"x", "y"}}));
    s.cases.push_back(invalid({abc, chain, {"x", "y", "z"}}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-ORDERED: right vertices exactly once, an edge flipped.
  {
    TestSuite s{suite::kEnforceOrdered, {}};
    s.cases.push_back(invalid({ab, edge_ab, {"b", "a"}}));
    s.cases.push_back(invalid({abc, chain, {"a", "c", "b"}}));
    suites.push_back(std::move(s));
  }

  // ENFORCE-NO-DUPS: a repeated vertex while the identity set still
  // matches and every edge is respected.
  {
    TestSuite s{suite::kEnforceNoDups, {}};
    s.cases.push_back(invalid({ab, edge_ab, {"a", "b", "b"}}));
    s.cases.push_back(invalid({abc, edge_ab, {"a", "a", "b", "c"}}));
    suites.push_back(std::move(s));
  }

  // RELATIONAL: a fan with two linear extensions, both expected true.
  {
    TestSuite s{suite::kRelational, {}};
    const std::vector<Edge> fan = {{"a", "b"}, {"a", "c"}};
    for (const auto& order : enumerate_topological_orders(abc, fan)) {
      s.cases.push_back(valid({abc, fan, order}));
    }
    suites.push_back(std::move(s));
  }

  // EDGE: the empty graph and a single isolated vertex.
  {
    TestSuite s{suite::kEdge, {}};
    s.cases.push_back(valid({{}, {}, {}}));
    s.cases.push_back(valid({{"a"}, {}, {"a"}}));
    suites.push_back(std::move(s));
  }

  return suites;
}

}  // namespace relacheck
