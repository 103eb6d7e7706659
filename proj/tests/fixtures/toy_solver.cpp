// Stand-alone implementation-mode fixture: reads {"problem", "input"}
// lines, answers {"output": ...} lines. Solves all three problems
// correctly by default; --bug selects a broken variant:
//   identity   sort: return the input unsorted
//   dup        toposort: emit the first vertex twice
//   drop       match: omit one pair from the matching
// --sleep-ms N delays every answer.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

json solve_sort(const json& input, const std::string& bug) {
  if (bug == "identity") return input;
  using Pair = std::pair<std::int64_t, json>;
  std::vector<Pair> keyed;
  for (const json& p : input) keyed.emplace_back(p.at("age").get<std::int64_t>(), p);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Pair& a, const Pair& b) { return a.first < b.first; });
  json out = json::array();
  for (const Pair& p : keyed) out.push_back(p.second);
  return out;
}

// Candidate-proposing deferred acceptance.
json solve_match(const json& input, const std::string& bug) {
  const auto cand = input.at("candidate_prefs")
                        .get<std::vector<std::vector<int>>>();
  const auto comp = input.at("company_prefs")
                        .get<std::vector<std::vector<int>>>();
  const int n = static_cast<int>(cand.size());
  const auto rank = [](const std::vector<int>& row, int x) {
    return static_cast<int>(std::find(row.begin(), row.end(), x) - row.begin());
  };

  std::vector<int> next(n, 0);
  std::vector<int> partner(n, -1);  // company -> candidate
  std::vector<int> free_list;
  for (int c = n - 1; c >= 0; --c) free_list.push_back(c);
  while (!free_list.empty()) {
    const int c = free_list.back();
    free_list.pop_back();
    const int k = cand[c][next[c]++];
    if (partner[k] < 0) {
      partner[k] = c;
    } else if (rank(comp[k], c) < rank(comp[k], partner[k])) {
      free_list.push_back(partner[k]);
      partner[k] = c;
    } else {
      free_list.push_back(c);
    }
  }

  json out = json::array();
  for (int k = 0; k < n; ++k) {
    if (bug == "drop" && k == 0) continue;
    out.push_back(json::array({partner[k], k}));
  }
  return out;
}

json solve_toposort(const json& input, const std::string& bug) {
  const auto vertices = input.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, int> indegree;
  std::map<std::string, std::set<std::string>> successors;
  for (const std::string& v : vertices) indegree[v] = 0;
  for (const json& edge : input.at("edges")) {
    const auto u = edge[0].get<std::string>();
    const auto v = edge[1].get<std::string>();
    if (successors[u].insert(v).second) ++indegree[v];
  }

  std::set<std::string> ready;
  for (const auto& [v, d] : indegree) {
    if (d == 0) ready.insert(v);
  }
  std::vector<std::string> order;
  while (!ready.empty()) {
    const std::string v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (const std::string& w : successors[v]) {
      if (--indegree[w] == 0) ready.insert(w);
    }
  }
  if (bug == "dup" && !order.empty()) order.push_back(order.front());
  return json(order);
}

}  // namespace

int main(int argc, char** argv) {
  std::string bug;
  long sleep_ms = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--bug" && i + 1 < argc) bug = argv[++i];
    if (arg == "--sleep-ms" && i + 1 < argc) sleep_ms = std::stol(argv[++i]);
  }

  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    if (sleep_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(sleep_ms));
    }
    try {
      const json request = json::parse(line);
      const std::string problem = request.at("problem").get<std::string>();
      const json& input = request.at("input");
      json output;
      if (problem == "sort") {
        output = solve_sort(input, bug);
      } else if (problem == "match") {
        output = solve_match(input, bug);
      } else {
        output = solve_toposort(input, bug);
      }
      std::cout << json{{"output", output}}.dump() << std::endl;
    } catch (const std::exception&) {
      std::cout << "{}" << std::endl;
    }
  }
  return 0;
}
