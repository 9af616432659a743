#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfcalc/lattice/combination.hpp"
#include "surfcalc/replay/json_io.hpp"

namespace surfcalc::replay {

/// Scenario validation failure; the message names the offending entry.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurveSet {
  std::string name;
  std::vector<std::string> points;
  std::vector<curves::CurveRecord> records;

  const curves::CurveRecord& at(const std::string& label) const;
};

struct InvolutionEntry {
  std::string name;
  std::string lattice;
  quotient::InvolutionSpec spec;
  /// Optional fixed-locus analysis data; null when absent.
  json lefschetz;
};

/// Named objects of a scenario, built on first use.
///
/// Lattices come from three places: explicit "lattices" entries (a Gram
/// matrix, a sublattice of another lattice, or the quotient by an
/// involution) and the resolution lattice of every "quotients" entry, which
/// is registered under the quotient's name.
class Workspace {
 public:
  /// Validates the scenario; throws ScenarioError.
  explicit Workspace(json scenario);

  const json& scenario() const { return scenario_; }
  const std::string& name() const { return name_; }

  bool has_lattice(const std::string& name) const;
  bool has_quotient(const std::string& name) const { return quotient_entries_.count(name) != 0; }
  bool has_involution(const std::string& name) const { return involutions_.count(name) != 0; }
  bool has_curves(const std::string& name) const { return curves_.count(name) != 0; }

  LatticePtr lattice(const std::string& name);
  /// Basis classes plus embedded and defined classes of the lattice.
  const NamedClasses& classes(const std::string& lattice_name);
  const CurveSet& curves(const std::string& name) const;
  const quotient::QuotientLattice& quotient(const std::string& name);
  const InvolutionEntry& involution(const std::string& name) const;

  DivisorClass evaluate(const std::string& lattice_name, const std::string& expression);

 private:
  void validate();
  void validate_assertion(const json& a, const std::string& where);
  void apply_definitions(NamedClasses& classes, const json& entry);

  json scenario_;
  std::string name_;
  std::map<std::string, json> lattice_entries_;
  std::map<std::string, json> quotient_entries_;
  std::map<std::string, CurveSet> curves_;
  std::map<std::string, InvolutionEntry> involutions_;

  std::map<std::string, LatticePtr> lattices_;
  std::map<std::string, std::unique_ptr<NamedClasses>> classes_;
  std::map<std::string, quotient::QuotientLattice> quotients_;
  std::set<std::string> building_;
};

}  // namespace surfcalc::replay
