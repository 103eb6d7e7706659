#pragma once

#include <json.hpp>

#include "relacheck/domain.hpp"

namespace relacheck {

// Canonical JSON encodings shared by suite fixtures and the wire protocol:
//   Person           {"name": string, "age": integer}
//   SortInstance     {"lst": [Person...], "srt": [Person...]}
//   MatchInstance    {"candidate_prefs": [[int...]...],
//                     "company_prefs":   [[int...]...],
//                     "match":           [[c, k]...]}
//   ToposortInstance {"vertices": [string...],
//                     "edges":    [[string, string]...],
//                     "srt":      [string...]}
//   TestSuite        {"name": string,
//                     "cases": [{"instance": ..., "expected": bool}...]}
// Decoding throws ValidationError naming the malformed field. A
// ToposortInstance without "vertices" defaults them to the edge endpoints.

nlohmann::json person_to_json(const Person& person);
Person person_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& instance);
// The instance kind is recognized from its keys.
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json suite_to_json(const TestSuite& suite);
TestSuite suite_from_json(const nlohmann::json& j);

// Wire-protocol halves: the INPUT an implementation consumes and the
// OUTPUT a validator judges.
//   sort      input [Person...]                          output [Person...]
//   match     input {"candidate_prefs", "company_prefs"} output [[c, k]...]
//   toposort  input {"vertices", "edges"}                output [string...]
nlohmann::json wire_input(const Instance& instance);
nlohmann::json wire_output(const Instance& instance);
Instance instance_from_wire(Problem problem, const nlohmann::json& input,
                            const nlohmann::json& output);

// One validator-mode request line: {"problem", "input", "output"}.
nlohmann::json validator_request(const Instance& instance);

}  // namespace relacheck
