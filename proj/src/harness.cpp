#include "relacheck/harness.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <utility>

#include "relacheck/errors.hpp"
#include "relacheck/json_codec.hpp"
#include "relacheck/match.hpp"
#include "relacheck/rng.hpp"
#include "relacheck/sort.hpp"
#include "relacheck/subprocess.hpp"
#include "relacheck/toposort.hpp"

namespace relacheck {

using nlohmann::json;

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kTrue:
      return "TRUE";
    case Outcome::kFalse:
      return "FALSE";
    case Outcome::kError:
      return "ERROR";
    case Outcome::kTimeout:
      return "TIMEOUT";
  }
  return "?";
}

Outcome outcome_from_name(std::string_view name) {
  if (name == "TRUE") return Outcome::kTrue;
  if (name == "FALSE") return Outcome::kFalse;
  if (name == "ERROR") return Outcome::kError;
  if (name == "TIMEOUT") return Outcome::kTimeout;
  throw ValidationError("outcome", "unknown outcome '" + std::string(name) + "'");
}

Candidate Candidate::reference() {
  Candidate c;
  c.id = "reference";
  c.kind = Kind::kReference;
  return c;
}

Candidate Candidate::mutant(std::string name) {
  Candidate c;
  c.id = name;
  c.kind = Kind::kBuiltinMutant;
  c.mutant_name = std::move(name);
  return c;
}

Candidate Candidate::external(std::string id, std::string command,
                              std::chrono::milliseconds timeout) {
  Candidate c;
  c.id = std::move(id);
  c.kind = Kind::kExternal;
  c.command = std::move(command);
  c.timeout = timeout;
  return c;
}

bool reference_is_valid(const Instance& instance) {
  return std::visit(
      [](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, SortInstance>) {
          return sort_is_valid(inst.lst, inst.srt);
        } else if constexpr (std::is_same_v<T, MatchInstance>) {
          return match_is_valid(inst);
        } else {
          return toposort_is_valid(inst);
        }
      },
      instance);
}

std::vector<TestSuite> build_suites(Problem problem) {
  switch (problem) {
    case Problem::kSort:
      return build_sort_suites();
    case Problem::kMatch:
      return build_match_suites();
    case Problem::kToposort:
      return build_toposort_suites();
  }
  return {};
}

namespace {

// Streams one suite's cases to an external candidate over a single
// process invocation. A case that times out kills the process; the next
// case respawns it. A spawn that dies unanswered with sh's 127/126 is a
// launch failure, not a case verdict.
class ExternalSession {
 public:
  explicit ExternalSession(const Candidate& candidate)
      : command_(candidate.command), timeout_(candidate.timeout) {}

  Verdict judge(std::size_t index, const Instance& instance) {
    Verdict verdict{index, Outcome::kError, ""};
    if (!process_) {
      process_ = std::make_unique<LineProcess>(command_);
      answered_since_spawn_ = false;
    }

    const std::string request = validator_request(instance).dump();
    if (!process_->send_line(request)) {
      handle_death(verdict, "write to candidate failed");
      return verdict;
    }

    std::string line;
    switch (process_->read_line(line, timeout_)) {
      case LineProcess::ReadStatus::kTimeout:
        verdict.outcome = Outcome::kTimeout;
        verdict.note = "no response within " +
                       std::to_string(timeout_.count()) + " ms";
        process_->terminate();
        process_.reset();
        return verdict;
      case LineProcess::ReadStatus::kEof:
        handle_death(verdict, "candidate exited mid-suite");
        return verdict;
      case LineProcess::ReadStatus::kLine:
        break;
    }

    answered_since_spawn_ = true;
    try {
      const json reply = json::parse(line);
      if (!reply.is_object() || !reply.contains("valid") ||
          !reply.at("valid").is_boolean()) {
        verdict.note = "malformed response: " + line;
        return verdict;
      }
      verdict.outcome =
          reply.at("valid").get<bool>() ? Outcome::kTrue : Outcome::kFalse;
    } catch (const json::parse_error&) {
      verdict.note = "unparsable response: " + line;
    }
    return verdict;
  }

 private:
  void handle_death(Verdict& verdict, const std::string& note) {
    const bool unlaunchable =
        !answered_since_spawn_ && process_->looks_unlaunchable();
    process_.reset();
    if (unlaunchable) {
      throw LaunchError("candidate command failed to launch: " + command_);
    }
    verdict.outcome = Outcome::kError;
    verdict.note = note;
  }

  std::string command_;
  std::chrono::milliseconds timeout_;
  std::unique_ptr<LineProcess> process_;
  bool answered_since_spawn_ = false;
};

Verdict judge_in_process(const Candidate& candidate, Problem problem,
                         std::size_t index, const Instance& instance) {
  Verdict verdict{index, Outcome::kError, ""};
  try {
    const bool valid =
        candidate.kind == Candidate::Kind::kReference
            ? reference_is_valid(instance)
            : mutant_is_valid(problem, candidate.mutant_name, instance);
    verdict.outcome = valid ? Outcome::kTrue : Outcome::kFalse;
  } catch (const std::exception& e) {
    verdict.note = e.what();
  }
  return verdict;
}

bool matches(const Verdict& verdict, bool expected) {
  return (verdict.outcome == Outcome::kTrue && expected) ||
         (verdict.outcome == Outcome::kFalse && !expected);
}

}  // namespace

SuiteResult run_suite(const Candidate& candidate, Problem problem,
                      const TestSuite& suite) {
  if (candidate.kind == Candidate::Kind::kBuiltinMutant) {
    const auto& corpus = mutant_corpus(problem);
    if (std::none_of(corpus.begin(), corpus.end(),
                     [&candidate](const MutantSpec& spec) {
                       return spec.name == candidate.mutant_name;
                     })) {
      throw ValidationError("mutant", "no mutant named '" +
                                          candidate.mutant_name +
                                          "' for problem " +
                                          std::string(problem_name(problem)));
    }
  }

  SuiteResult result{suite.name, {}, true};
  std::optional<ExternalSession> session;
  if (candidate.kind == Candidate::Kind::kExternal) {
    session.emplace(candidate);
  }

  for (std::size_t i = 0; i < suite.cases.size(); ++i) {
    const TestCase& test_case = suite.cases[i];
    const Verdict verdict =
        session ? session->judge(i, test_case.instance)
                : judge_in_process(candidate, problem, i, test_case.instance);
    if (!matches(verdict, test_case.expected)) result.accepted = false;
    result.verdicts.push_back(verdict);
  }
  return result;
}

RejectionPattern classify(const Candidate& candidate, Problem problem) {
  return classify(candidate, problem, build_suites(problem));
}

RejectionPattern classify(const Candidate& candidate, Problem problem,
                          const std::vector<TestSuite>& suites) {
  RejectionPattern pattern;
  pattern.candidate_id = candidate.id;
  pattern.problem = problem;
  pattern.functional_accepted = true;

  // FUNCTIONAL runs first; everything else still runs afterwards so the
  // verdicts stay available even for gated candidates.
  std::vector<const TestSuite*> ordered;
  for (const TestSuite& suite : suites) {
    if (suite.name == suite::kFunctional) ordered.insert(ordered.begin(), &suite);
    else ordered.push_back(&suite);
  }

  for (const TestSuite* suite : ordered) {
    SuiteResult result = run_suite(candidate, problem, *suite);
    if (!result.accepted) {
      pattern.rejected_by.insert(result.suite_name);
      if (result.suite_name == suite::kFunctional) {
        pattern.functional_accepted = false;
      }
    }
    pattern.suite_results.push_back(std::move(result));
  }
  return pattern;
}

json pattern_to_json(const RejectionPattern& pattern) {
  json suites = json::array();
  for (const SuiteResult& result : pattern.suite_results) {
    json verdicts = json::array();
    for (const Verdict& v : result.verdicts) {
      json item{{"case", v.case_index},
                {"outcome", std::string(outcome_name(v.outcome))}};
      if (!v.note.empty()) item["note"] = v.note;
      verdicts.push_back(std::move(item));
    }
    suites.push_back(json{{"name", result.suite_name},
                          {"accepted", result.accepted},
                          {"verdicts", std::move(verdicts)}});
  }
  return json{{"candidate", pattern.candidate_id},
              {"problem", std::string(problem_name(pattern.problem))},
              {"functional_accepted", pattern.functional_accepted},
              {"rejected_by", pattern.rejected_by},
              {"suites", std::move(suites)}};
}

RejectionPattern pattern_from_json(const json& j) {
  if (!j.is_object() || !j.contains("candidate") || !j.contains("problem") ||
      !j.contains("functional_accepted") || !j.contains("rejected_by")) {
    throw ValidationError("pattern", "not a rejection-pattern object");
  }
  RejectionPattern pattern;
  pattern.candidate_id = j.at("candidate").get<std::string>();
  pattern.problem = problem_from_name(j.at("problem").get<std::string>());
  pattern.functional_accepted = j.at("functional_accepted").get<bool>();
  for (const json& name : j.at("rejected_by")) {
    pattern.rejected_by.insert(name.get<std::string>());
  }
  for (const json& s : j.value("suites", json::array())) {
    SuiteResult result;
    result.suite_name = s.at("name").get<std::string>();
    result.accepted = s.at("accepted").get<bool>();
    for (const json& v : s.at("verdicts")) {
      Verdict verdict;
      verdict.case_index = v.at("case").get<std::size_t>();
      verdict.outcome = outcome_from_name(v.at("outcome").get<std::string>());
      verdict.note = v.value("note", "");
      result.verdicts.push_back(std::move(verdict));
    }
    pattern.suite_results.push_back(std::move(result));
  }
  return pattern;
}

namespace {

std::vector<Instance> handcrafted_inputs(Problem problem) {
  switch (problem) {
    case Problem::kSort: {
      const Person a3{"A", 3}, b1{"B", 1}, c3{"C", 3}, d2{"D", 2};
      return {SortInstance{{}, {}},
              SortInstance{{b1}, {}},
              SortInstance{{a3, b1, c3, d2}, {}},
              SortInstance{{{"E", 4}, {"D", 3}, {"C", 2}, {"B", 1}}, {}}};
    }
    case Problem::kMatch: {
      const MatchPreferences crossed{{{0, 1}, {1, 0}}, {{1, 0}, {0, 1}}};
      const MatchPreferences uniform3{{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}},
                                      {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
      return {MatchInstance{MatchPreferences{{}, {}}, {}},
              MatchInstance{MatchPreferences{{{0}}, {{0}}}, {}},
              MatchInstance{crossed, {}},
              MatchInstance{uniform3, {}}};
    }
    case Problem::kToposort: {
      using E = std::vector<std::pair<std::string, std::string>>;
      return {ToposortInstance{{}, {}, {}},
              ToposortInstance{{"v0"}, {}, {}},
              ToposortInstance{{"a", "b", "c"}, E{{"a", "b"}, {"b", "c"}}, {}},
              ToposortInstance{{"a", "b", "c", "d"},
                               E{{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}},
                               {}}};
    }
  }
  return {};
}

Instance generated_input(Problem problem, std::size_t size,
                         std::uint64_t seed) {
  switch (problem) {
    case Problem::kSort:
      return SortInstance{generate_sort_input(size, seed), {}};
    case Problem::kMatch:
      return MatchInstance{generate_match_input(size, seed), {}};
    case Problem::kToposort: {
      const Dag dag = generate_dag(size, seed);
      return ToposortInstance{dag.vertices, dag.edges, {}};
    }
  }
  return SortInstance{};
}

}  // namespace

ImplementationReport check_implementation(
    const std::string& command, Problem problem,
    const std::vector<std::size_t>& sizes, std::size_t trials_per_size,
    std::uint64_t seed, std::chrono::milliseconds timeout) {
  ImplementationReport report;
  report.passed = true;

  struct Trial {
    std::string label;
    Instance input;
  };
  std::vector<Trial> trials;
  const std::vector<Instance> handcrafted = handcrafted_inputs(problem);
  for (std::size_t i = 0; i < handcrafted.size(); ++i) {
    trials.push_back({"handcrafted[" + std::to_string(i) + "]",
                      handcrafted[i]});
  }
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    for (std::size_t t = 0; t < trials_per_size; ++t) {
      trials.push_back(
          {"size=" + std::to_string(sizes[si]) + " trial=" + std::to_string(t),
           generated_input(problem, sizes[si], rng::mix(seed, si, t))});
    }
  }

  std::unique_ptr<LineProcess> process;
  bool answered_since_spawn = false;
  for (const Trial& trial : trials) {
    TrialResult result{trial.label, false, ""};
    if (!process) {
      process = std::make_unique<LineProcess>(command);
      answered_since_spawn = false;
    }

    const json request = {
        {"problem", std::string(problem_name(problem))},
        {"input", wire_input(trial.input)},
    };
    std::string line;
    if (!process->send_line(request.dump())) {
      result.diagnostic = "write to implementation failed";
      process.reset();
      report.trials.push_back(std::move(result));
      report.passed = false;
      continue;
    }
    const auto status = process->read_line(line, timeout);
    if (status == LineProcess::ReadStatus::kTimeout) {
      result.diagnostic =
          "no output within " + std::to_string(timeout.count()) + " ms";
      process->terminate();
      process.reset();
    } else if (status == LineProcess::ReadStatus::kEof) {
      const bool unlaunchable =
          !answered_since_spawn && process->looks_unlaunchable();
      process.reset();
      if (unlaunchable) {
        throw LaunchError("implementation command failed to launch: " +
                          command);
      }
      result.diagnostic = "implementation exited without answering";
    } else {
      answered_since_spawn = true;
      try {
        const json reply = json::parse(line);
        const Instance full = instance_from_wire(
            problem, wire_input(trial.input), reply.at("output"));
        if (reference_is_valid(full)) {
          result.passed = true;
        } else {
          std::string names;
          for (const std::string& name : violated_names(full)) {
            names += (names.empty() ? "" : ", ") + name;
          }
          result.diagnostic = "output violates: " + names;
        }
      } catch (const std::exception& e) {
        result.diagnostic = std::string("bad response: ") + e.what();
      }
    }

    if (!result.passed) report.passed = false;
    report.trials.push_back(std::move(result));
  }
  return report;
}

}  // namespace relacheck
