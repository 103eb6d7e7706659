// relacheck — grade validity predicates for relational problems.
//
// Subcommands:
//   grade      run a candidate validator over a problem's suites
//   suites     export all suite fixtures as JSON files
//   enumerate  print every valid output for an instance's INPUT
//   gen        emit a generated INPUT
//   check      test a purported implementation against the oracle
//   report     aggregate rejection patterns into a Venn-region report
//
// Exit codes: 0 success (grading verdicts live in the output), 1 usage
// error, 2 candidate launch failure, 3 internal invariant violation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "relacheck/errors.hpp"
#include "relacheck/harness.hpp"
#include "relacheck/json_codec.hpp"
#include "relacheck/match.hpp"
#include "relacheck/report.hpp"
#include "relacheck/sort.hpp"
#include "relacheck/toposort.hpp"

namespace {

using nlohmann::json;
using namespace relacheck;

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("RELACHECK_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return kDefaultSeed;
}

void write_or_print(const std::optional<std::string>& out_file,
                    const std::string& text) {
  if (out_file) {
    std::ofstream out(*out_file, std::ios::binary);
    if (!out) throw Error("cannot open output file " + *out_file);
    out << text;
  } else {
    std::cout << text;
  }
}

std::string pattern_text(const RejectionPattern& pattern) {
  std::ostringstream out;
  out << "candidate: " << pattern.candidate_id << "\n";
  out << "problem: " << problem_name(pattern.problem) << "\n";
  out << "functional: " << (pattern.functional_accepted ? "accepted" : "REJECTED")
      << "\n";
  out << "rejected by: "
      << (pattern.rejected_by.empty() ? "(nothing)"
                                      : region_key(pattern.rejected_by))
      << "\n";
  for (const SuiteResult& result : pattern.suite_results) {
    out << "  " << result.suite_name
        << std::string(result.suite_name.size() < 24
                           ? 24 - result.suite_name.size()
                           : 1,
                       ' ')
        << (result.accepted ? "accepted" : "REJECTED") << " ("
        << result.verdicts.size() << " cases)\n";
  }
  return out.str();
}

std::vector<TestSuite> filter_suites(Problem problem,
                                     const std::string& selection) {
  std::vector<TestSuite> suites = build_suites(problem);
  if (selection.empty() || selection == "all") return suites;

  std::set<std::string> wanted;
  std::stringstream stream(selection);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (!name.empty()) wanted.insert(name);
  }
  // FUNCTIONAL always runs; it is the gate.
  wanted.insert(suite::kFunctional);

  std::vector<TestSuite> filtered;
  for (TestSuite& suite : suites) {
    if (wanted.contains(suite.name)) filtered.push_back(std::move(suite));
  }
  if (filtered.size() != wanted.size()) {
    for (const std::string& w : wanted) {
      if (std::none_of(filtered.begin(), filtered.end(),
                       [&w](const TestSuite& s) { return s.name == w; })) {
        throw ValidationError("suites", "no suite named '" + w + "'");
      }
    }
  }
  return filtered;
}

Instance input_only_instance(Problem problem, const json& j) {
  switch (problem) {
    case Problem::kSort: {
      json lst = j.is_array() ? j : j.value("lst", json::array());
      return instance_from_wire(problem, lst, json::array());
    }
    case Problem::kMatch:
      return instance_from_wire(problem, j, json::array());
    case Problem::kToposort: {
      json input = j;
      if (!input.contains("vertices")) {
        // accept edge-only files; endpoints become the vertex set
        const Instance sniffed = instance_from_json(
            json{{"edges", input.at("edges")}, {"srt", json::array()}});
        input["vertices"] = json(std::get<ToposortInstance>(sniffed).vertices);
      }
      return instance_from_wire(problem, input, json::array());
    }
  }
  throw ValidationError("problem", "unknown problem");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("instance", path + ": " + e.what());
  }
  return j;
}

int run_grade(Problem problem, const std::optional<std::string>& external,
              const std::optional<std::string>& mutant, bool reference,
              bool all_mutants, const std::string& suite_selection,
              std::chrono::milliseconds timeout, const std::string& format,
              const std::optional<std::string>& out_file) {
  const std::vector<TestSuite> suites = filter_suites(problem, suite_selection);

  std::vector<Candidate> candidates;
  if (reference) candidates.push_back(Candidate::reference());
  if (mutant) candidates.push_back(Candidate::mutant(*mutant));
  if (external) {
    candidates.push_back(Candidate::external(*external, *external, timeout));
  }
  if (all_mutants) {
    for (const MutantSpec& spec : mutant_corpus(problem)) {
      candidates.push_back(Candidate::mutant(spec.name));
    }
  }
  if (candidates.empty()) {
    throw ValidationError(
        "candidate",
        "pass one of --candidate, --mutant, --reference, --all-mutants");
  }

  std::string output;
  for (const Candidate& candidate : candidates) {
    const RejectionPattern pattern = classify(candidate, problem, suites);
    if (format == "json") {
      output += pattern_to_json(pattern).dump() + "\n";
    } else {
      output += pattern_text(pattern) + "\n";
    }
  }
  write_or_print(out_file, output);
  return 0;
}

int run_suites(Problem problem, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  for (const TestSuite& suite : build_suites(problem)) {
    const std::filesystem::path path =
        std::filesystem::path(out_dir) /
        (std::string(problem_name(problem)) + "-" + suite.name + ".json");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string());
    out << suite_to_json(suite).dump(2) << "\n";
    std::cout << path.string() << "\n";
  }
  return 0;
}

int run_enumerate(Problem problem, const std::string& instance_file) {
  const Instance instance =
      input_only_instance(problem, load_json_file(instance_file));
  json outputs = json::array();
  switch (problem) {
    case Problem::kSort: {
      const auto& inst = std::get<SortInstance>(instance);
      for (const auto& ordering : enumerate_valid_sorts(inst.lst)) {
        outputs.push_back(wire_output(SortInstance{{}, ordering}));
      }
      break;
    }
    case Problem::kMatch: {
      const auto& inst = std::get<MatchInstance>(instance);
      for (const Matching& m : enumerate_stable_matchings(inst.prefs)) {
        outputs.push_back(wire_output(MatchInstance{{}, m}));
      }
      break;
    }
    case Problem::kToposort: {
      const auto& inst = std::get<ToposortInstance>(instance);
      for (const auto& order :
           enumerate_topological_orders(inst.vertices, inst.edges)) {
        outputs.push_back(json(order));
      }
      break;
    }
  }
  std::cout << outputs.dump() << "\n";
  return 0;
}

int run_gen(Problem problem, std::size_t size, std::uint64_t seed,
            double edge_prob) {
  json out;
  switch (problem) {
    case Problem::kSort:
      out = wire_input(SortInstance{generate_sort_input(size, seed), {}});
      break;
    case Problem::kMatch:
      out = wire_input(MatchInstance{generate_match_input(size, seed), {}});
      break;
    case Problem::kToposort: {
      const Dag dag = generate_dag(size, seed, edge_prob);
      out = wire_input(ToposortInstance{dag.vertices, dag.edges, {}});
      break;
    }
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_check(Problem problem, const std::string& command,
              const std::string& sizes_csv, std::size_t trials,
              std::uint64_t seed, std::chrono::milliseconds timeout) {
  std::vector<std::size_t> sizes;
  std::stringstream stream(sizes_csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) sizes.push_back(std::stoul(token));
  }

  const ImplementationReport report =
      check_implementation(command, problem, sizes, trials, seed, timeout);
  for (const TrialResult& trial : report.trials) {
    std::cout << (trial.passed ? "pass" : "FAIL") << "  " << trial.label;
    if (!trial.diagnostic.empty()) std::cout << "  (" << trial.diagnostic << ")";
    std::cout << "\n";
  }
  std::cout << "overall: " << (report.passed ? "pass" : "FAIL") << "\n";
  return 0;
}

int run_report(const std::string& patterns_file, const std::string& format) {
  std::ifstream in(patterns_file);
  if (!in) throw Error("cannot open " + patterns_file);
  std::vector<RejectionPattern> patterns;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    patterns.push_back(pattern_from_json(json::parse(line)));
  }
  const VennReport report = aggregate(patterns);
  std::cout << render(report, format == "json" ? ReportFormat::kJson
                                               : ReportFormat::kText);
  if (format == "json") std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grade validity predicates for relational problems"};
  app.require_subcommand(1);

  std::string problem_str;
  const auto add_problem = [&problem_str](CLI::App* cmd) {
    cmd->add_option("--problem", problem_str, "sort, match or toposort")
        ->required();
  };

  // grade
  auto* grade = app.add_subcommand("grade", "classify a candidate validator");
  add_problem(grade);
  std::optional<std::string> candidate_cmd;
  std::optional<std::string> mutant_name;
  bool use_reference = false;
  bool all_mutants = false;
  std::string suite_selection = "all";
  long timeout_ms = kDefaultCaseTimeout.count();
  std::optional<std::uint64_t> seed_flag;
  std::string format = "json";
  std::optional<std::string> out_file;
  grade->add_option("--candidate", candidate_cmd,
                    "external validator command (wire protocol)");
  grade->add_option("--mutant", mutant_name, "built-in mutant name");
  grade->add_flag("--reference", use_reference, "grade the reference predicate");
  grade->add_flag("--all-mutants", all_mutants, "grade the whole mutant corpus");
  grade->add_option("--suites", suite_selection,
                    "comma-separated suite names, or 'all'");
  grade->add_option("--timeout-ms", timeout_ms, "per-case timeout");
  grade->add_option("--seed", seed_flag, "seed (reserved; suites are fixed)");
  grade->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  grade->add_option("--out", out_file, "write output to a file");

  // suites
  auto* suites_cmd = app.add_subcommand("suites", "export suite fixtures");
  add_problem(suites_cmd);
  std::string out_dir;
  suites_cmd->add_option("--out", out_dir, "output directory")->required();

  // enumerate
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "print all valid outputs for an INPUT");
  add_problem(enumerate_cmd);
  std::string instance_file;
  enumerate_cmd->add_option("--instance", instance_file, "instance JSON file")
      ->required();

  // gen
  auto* gen = app.add_subcommand("gen", "emit a generated INPUT");
  add_problem(gen);
  std::size_t gen_size = 0;
  double edge_prob = kDefaultEdgeProbability;
  gen->add_option("--size", gen_size, "input size")->required();
  gen->add_option("--seed", seed_flag, "generator seed");
  gen->add_option("--edge-prob", edge_prob, "toposort edge probability");

  // check
  auto* check = app.add_subcommand("check", "oracle over an implementation");
  add_problem(check);
  std::string impl_command;
  std::string sizes_csv = "0,1,5,20";
  std::size_t trials = 3;
  check->add_option("--impl", impl_command, "implementation command")
      ->required();
  check->add_option("--sizes", sizes_csv, "comma-separated input sizes");
  check->add_option("--trials", trials, "trials per size");
  check->add_option("--seed", seed_flag, "generator seed");
  check->add_option("--timeout-ms", timeout_ms, "per-trial timeout");

  // report
  auto* report_cmd =
      app.add_subcommand("report", "aggregate rejection patterns");
  std::string patterns_file;
  report_cmd->add_option("--patterns", patterns_file,
                         "file of RejectionPattern JSON lines")
      ->required();
  report_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::uint64_t seed = resolve_seed(seed_flag);
    const auto timeout = std::chrono::milliseconds(timeout_ms);
    if (grade->parsed()) {
      return run_grade(problem_from_name(problem_str), candidate_cmd,
                       mutant_name, use_reference, all_mutants,
                       suite_selection, timeout, format, out_file);
    }
    if (suites_cmd->parsed()) {
      return run_suites(problem_from_name(problem_str), out_dir);
    }
    if (enumerate_cmd->parsed()) {
      return run_enumerate(problem_from_name(problem_str), instance_file);
    }
    if (gen->parsed()) {
      return run_gen(problem_from_name(problem_str), gen_size, seed, edge_prob);
    }
    if (check->parsed()) {
      return run_check(problem_from_name(problem_str), impl_command, sizes_csv,
                       trials, seed, timeout);
    }
    if (report_cmd->parsed()) {
      return run_report(patterns_file, format);
    }
  } catch (const LaunchError& e) {
    std::cerr << "launch failure: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotFoundError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
