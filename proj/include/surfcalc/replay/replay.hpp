#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "surfcalc/replay/workspace.hpp"

namespace surfcalc::replay {

enum class Status { pass, fail, assumed };

std::string to_string(Status s);

struct AssertionResult {
  std::string id;
  std::string description;
  std::string computed;
  std::string expected;
  Status status = Status::fail;
};

struct ReplayReport {
  std::string scenario;
  std::vector<AssertionResult> assertions;

  /// Assumed entries do not fail a run; every checked assertion must pass.
  bool pass() const;
  const AssertionResult* find(const std::string& id) const;
};

const std::set<std::string>& known_assertion_kinds();

/// Names accepted by run_scenario without touching the file system.
std::vector<std::string> builtin_scenario_names();
/// Throws std::invalid_argument for an unknown name.
json builtin_scenario(const std::string& name);

/// A built-in name or a path to a scenario file.
json load_scenario(const std::string& name_or_path);

/// Runs every assertion in order. Validation problems throw ScenarioError;
/// a failing or throwing assertion is recorded and the run continues.
ReplayReport run_scenario(const json& scenario);
ReplayReport run_scenario(const std::string& name_or_path);

struct PairingContradiction {
  /// Pullback of the pushed-forward class, on the resolution.
  DivisorClass pulled_back;
  Rational pairing;
  Rational self_intersection;
};

/// Evaluates a "contradiction_pairing" assertion: push the representative
/// forward (p_*E = d * image of E), pull back to the resolution, pair with
/// its image under the involution.
PairingContradiction contradiction_pairing(Workspace& ws, const json& assertion);

/// The pairing of the first "contradiction_pairing" assertion of the scenario.
Rational section6_contradiction(const json& scenario);

/// "text" (fixed-width table) or "json". Other formats: std::invalid_argument.
std::string emit_report(const ReplayReport& report, const std::string& format);

int exit_code(const ReplayReport& report);

}  // namespace surfcalc::replay
