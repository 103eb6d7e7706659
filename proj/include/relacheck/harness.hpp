#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "relacheck/domain.hpp"

namespace relacheck {

inline constexpr std::chrono::milliseconds kDefaultCaseTimeout{2000};

enum class Outcome { kTrue, kFalse, kError, kTimeout };

std::string_view outcome_name(Outcome outcome);
Outcome outcome_from_name(std::string_view name);

// ERROR and TIMEOUT never count as matching an expected boolean.
struct Verdict {
  std::size_t case_index = 0;
  Outcome outcome = Outcome::kError;
  std::string note;  // diagnostic for ERROR/TIMEOUT; empty otherwise

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct SuiteResult {
  std::string suite_name;
  std::vector<Verdict> verdicts;
  bool accepted = false;  // every verdict matched its expected boolean

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

// A validity predicate under evaluation: the in-process reference, a
// registered built-in mutant, or an external command speaking the wire
// protocol.
struct Candidate {
  enum class Kind { kReference, kBuiltinMutant, kExternal };

  std::string id;
  Kind kind = Kind::kReference;
  std::string mutant_name;  // kBuiltinMutant
  std::string command;      // kExternal
  std::chrono::milliseconds timeout = kDefaultCaseTimeout;

  static Candidate reference();
  static Candidate mutant(std::string name);
  static Candidate external(std::string id, std::string command,
                            std::chrono::milliseconds timeout =
                                kDefaultCaseTimeout);
};

// A deliberately flawed validator modeling one documented failure mode,
// with the exact set of suites that must reject it.
struct MutantSpec {
  std::string name;
  Problem problem;
  std::string description;
  std::set<std::string> expected_rejected_by;
};

const std::vector<MutantSpec>& mutant_corpus(Problem problem);

bool reference_is_valid(const Instance& instance);

// Evaluates a registered mutant; throws ValidationError for unknown names
// and whatever the mutant itself throws (crash-style mutants do).
bool mutant_is_valid(Problem problem, std::string_view mutant_name,
                     const Instance& instance);

// All suites for a problem, FUNCTIONAL first, in a fixed order.
std::vector<TestSuite> build_suites(Problem problem);

// Runs every case; accepted iff all verdicts match. External candidates
// are driven in batch over one process invocation per suite with a
// per-case timeout; a candidate that cannot launch raises LaunchError.
SuiteResult run_suite(const Candidate& candidate, Problem problem,
                      const TestSuite& suite);

// One candidate's acceptance-rejection pattern across a problem's suites.
struct RejectionPattern {
  std::string candidate_id;
  Problem problem = Problem::kSort;
  bool functional_accepted = false;
  std::set<std::string> rejected_by;
  std::vector<SuiteResult> suite_results;

  friend bool operator==(const RejectionPattern&,
                         const RejectionPattern&) = default;
};

// Runs FUNCTIONAL first and records the gate, then every remaining suite
// regardless; report-level attribution is what honors the gate.
RejectionPattern classify(const Candidate& candidate, Problem problem);
RejectionPattern classify(const Candidate& candidate, Problem problem,
                          const std::vector<TestSuite>& suites);

nlohmann::json pattern_to_json(const RejectionPattern& pattern);
RejectionPattern pattern_from_json(const nlohmann::json& j);

// The oracle over purported implementations: hand-crafted small inputs
// (including empty) first, then seeded generated inputs per size, each
// output judged by the reference validator.
struct TrialResult {
  std::string label;
  bool passed = false;
  std::string diagnostic;
};

struct ImplementationReport {
  std::vector<TrialResult> trials;
  bool passed = false;  // every trial validated
};

ImplementationReport check_implementation(
    const std::string& command, Problem problem,
    const std::vector<std::size_t>& sizes, std::size_t trials_per_size,
    std::uint64_t seed,
    std::chrono::milliseconds timeout = kDefaultCaseTimeout);

}  // namespace relacheck
