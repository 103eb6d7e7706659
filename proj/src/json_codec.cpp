#include "relacheck/json_codec.hpp"

#include <algorithm>
#include <string>

#include "relacheck/errors.hpp"

namespace relacheck {

using nlohmann::json;

namespace {

const json& expect(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(key, "missing field");
  }
  return j.at(key);
}

std::vector<Person> people_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ValidationError(field, "expected an array");
  std::vector<Person> people;
  people.reserve(j.size());
  for (const json& item : j) people.push_back(person_from_json(item));
  return people;
}

json people_to_json(const std::vector<Person>& people) {
  json out = json::array();
  for (const Person& p : people) out.push_back(person_to_json(p));
  return out;
}

std::vector<std::vector<int>> matrix_from_json(const json& j,
                                               const char* field) {
  if (!j.is_array()) throw ValidationError(field, "expected an array of rows");
  std::vector<std::vector<int>> matrix;
  for (const json& row : j) {
    if (!row.is_array()) throw ValidationError(field, "row is not an array");
    std::vector<int> values;
    for (const json& v : row) {
      if (!v.is_number_integer()) {
        throw ValidationError(field, "row entry is not an integer");
      }
      values.push_back(v.get<int>());
    }
    matrix.push_back(std::move(values));
  }
  return matrix;
}

Matching matching_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("match", "expected an array");
  Matching matching;  // duplicates collapse here
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw ValidationError("match", "pair is not [candidate, company]");
    }
    matching.insert({pair[0].get<int>(), pair[1].get<int>()});
  }
  return matching;
}

json matching_to_json(const Matching& matching) {
  json out = json::array();
  for (const auto& [c, k] : matching) out.push_back(json::array({c, k}));
  return out;
}

std::vector<std::string> strings_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ValidationError(field, "expected an array");
  std::vector<std::string> out;
  for (const json& v : j) {
    if (!v.is_string()) throw ValidationError(field, "entry is not a string");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> edges_from_json(
    const json& j) {
  if (!j.is_array()) throw ValidationError("edges", "expected an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string()) {
      throw ValidationError("edges", "edge is not [source, target]");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return edges;
}

json edges_to_json(
    const std::vector<std::pair<std::string, std::string>>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

SortInstance sort_instance_from_json(const json& j) {
  return SortInstance{people_from_json(expect(j, "lst"), "lst"),
                      people_from_json(expect(j, "srt"), "srt")};
}

MatchInstance match_instance_from_json(const json& j) {
  MatchInstance instance;
  instance.prefs.candidate_prefs =
      matrix_from_json(expect(j, "candidate_prefs"), "candidate_prefs");
  instance.prefs.company_prefs =
      matrix_from_json(expect(j, "company_prefs"), "company_prefs");
  instance.match = matching_from_json(expect(j, "match"));
  return instance;
}

ToposortInstance toposort_instance_from_json(const json& j) {
  ToposortInstance instance;
  instance.edges = edges_from_json(expect(j, "edges"));
  if (j.contains("vertices")) {
    instance.vertices = strings_from_json(j.at("vertices"), "vertices");
  } else {
    std::set<std::string> endpoints;
    for (const auto& [u, v] : instance.edges) {
      endpoints.insert(u);
      endpoints.insert(v);
    }
    instance.vertices.assign(endpoints.begin(), endpoints.end());
  }
  instance.srt = strings_from_json(expect(j, "srt"), "srt");
  return instance;
}

}  // namespace

json person_to_json(const Person& person) {
  return json{{"name", person.name}, {"age", person.age}};
}

Person person_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("age") ||
      !j.at("name").is_string() || !j.at("age").is_number_integer()) {
    throw ValidationError("person", "expected {\"name\": string, \"age\": integer}");
  }
  return Person{j.at("name").get<std::string>(),
                j.at("age").get<std::int64_t>()};
}

json instance_to_json(const Instance& instance) {
  return std::visit(
      [](const auto& inst) -> json {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, SortInstance>) {
          return json{{"lst", people_to_json(inst.lst)},
                      {"srt", people_to_json(inst.srt)}};
        } else if constexpr (std::is_same_v<T, MatchInstance>) {
          return json{{"candidate_prefs", inst.prefs.candidate_prefs},
                      {"company_prefs", inst.prefs.company_prefs},
                      {"match", matching_to_json(inst.match)}};
        } else {
          return json{{"vertices", inst.vertices},
                      {"edges", edges_to_json(inst.edges)},
                      {"srt", inst.srt}};
        }
      },
      instance);
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) {
    throw ValidationError("instance", "expected an object");
  }
  if (j.contains("lst")) return sort_instance_from_json(j);
  if (j.contains("candidate_prefs")) return match_instance_from_json(j);
  if (j.contains("edges")) return toposort_instance_from_json(j);
  throw ValidationError("instance", "unrecognized instance shape");
}

json suite_to_json(const TestSuite& suite) {
  json cases = json::array();
  for (const TestCase& c : suite.cases) {
    cases.push_back(json{{"instance", instance_to_json(c.instance)},
                         {"expected", c.expected}});
  }
  return json{{"name", suite.name}, {"cases", cases}};
}

TestSuite suite_from_json(const json& j) {
  TestSuite suite;
  const json& name = expect(j, "name");
  if (!name.is_string()) throw ValidationError("name", "expected a string");
  suite.name = name.get<std::string>();
  const json& cases = expect(j, "cases");
  if (!cases.is_array()) throw ValidationError("cases", "expected an array");
  for (const json& c : cases) {
    const json& expected = expect(c, "expected");
    if (!expected.is_boolean()) {
      throw ValidationError("expected", "expected a boolean");
    }
    suite.cases.push_back(TestCase{instance_from_json(expect(c, "instance")),
                                   expected.get<bool>()});
  }
  return suite;
}

json wire_input(const Instance& instance) {
  return std::visit(
      [](const auto& inst) -> json {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, SortInstance>) {
          return people_to_json(inst.lst);
        } else if constexpr (std::is_same_v<T, MatchInstance>) {
          return json{{"candidate_prefs", inst.prefs.candidate_prefs},
                      {"company_prefs", inst.prefs.company_prefs}};
        } else {
          return json{{"vertices", inst.vertices},
                      {"edges", edges_to_json(inst.edges)}};
        }
      },
      instance);
}

json wire_output(const Instance& instance) {
  return std::visit(
      [](const auto& inst) -> json {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, SortInstance>) {
          return people_to_json(inst.srt);
        } else if constexpr (std::is_same_v<T, MatchInstance>) {
          return matching_to_json(inst.match);
        } else {
          return json(inst.srt);
        }
      },
      instance);
}

Instance instance_from_wire(Problem problem, const json& input,
                            const json& output) {
  switch (problem) {
    case Problem::kSort:
      return SortInstance{people_from_json(input, "input"),
                          people_from_json(output, "output")};
    case Problem::kMatch: {
      MatchInstance instance;
      instance.prefs.candidate_prefs = matrix_from_json(
          expect(input, "candidate_prefs"), "candidate_prefs");
      instance.prefs.company_prefs =
          matrix_from_json(expect(input, "company_prefs"), "company_prefs");
      instance.match = matching_from_json(output);
      return instance;
    }
    case Problem::kToposort: {
      ToposortInstance instance;
      instance.vertices =
          strings_from_json(expect(input, "vertices"), "vertices");
      instance.edges = edges_from_json(expect(input, "edges"));
      instance.srt = strings_from_json(output, "output");
      return instance;
    }
  }
  throw ValidationError("problem", "unknown problem");
}

json validator_request(const Instance& instance) {
  return json{{"problem", std::string(problem_name(problem_of(instance)))},
              {"input", wire_input(instance)},
              {"output", wire_output(instance)}};
}

}  // namespace relacheck
