#include "surfcalc/replay/workspace.hpp"

#include "surfcalc/replay/replay.hpp"

namespace surfcalc::replay {

const curves::CurveRecord& CurveSet::at(const std::string& label) const {
  for (const auto& r : records) {
    if (r.label == label) {
      return r;
    }
  }
  throw std::invalid_argument("curve set " + name + " has no curve " + label);
}

namespace {

const json& section(const json& s, const char* key) {
  static const json empty = json::array();
  if (!s.contains(key)) {
    return empty;
  }
  if (!s.at(key).is_array()) {
    throw ScenarioError(std::string("\"") + key + "\" must be an array");
  }
  return s.at(key);
}

std::string entry_name(const json& e, const std::string& where) {
  if (!e.is_object() || !e.contains("name") || !e.at("name").is_string()) {
    throw ScenarioError(where + ": missing \"name\"");
  }
  return e.at("name").get<std::string>();
}

bool symmetric_table(const json& t) {
  if (!t.is_array()) {
    return false;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_array() || t[i].size() != t.size()) {
      return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rational_from_json(t[i][j]) != rational_from_json(t[j][i])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Workspace::Workspace(json scenario) : scenario_(std::move(scenario)) {
  try {
    validate();
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(e.what());
  }
}

void Workspace::validate() {
  if (!scenario_.is_object()) {
    throw ScenarioError("scenario must be a JSON object");
  }
  name_ = scenario_.value("name", std::string("unnamed"));

  const auto& lattices = section(scenario_, "lattices");
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const std::string where = "lattices[" + std::to_string(i) + "]";
    const auto n = entry_name(lattices[i], where);
    if (!lattice_entries_.emplace(n, lattices[i]).second) {
      throw ScenarioError(where + ": duplicate lattice name '" + n + "'");
    }
  }
  const auto& quotients = section(scenario_, "quotients");
  for (std::size_t i = 0; i < quotients.size(); ++i) {
    const std::string where = "quotients[" + std::to_string(i) + "]";
    const auto n = entry_name(quotients[i], where);
    if (lattice_entries_.count(n) || !quotient_entries_.emplace(n, quotients[i]).second) {
      throw ScenarioError(where + ": name '" + n + "' already used by another lattice");
    }
  }
  const auto& curve_sets = section(scenario_, "curves");
  for (std::size_t i = 0; i < curve_sets.size(); ++i) {
    const std::string where = "curves[" + std::to_string(i) + "]";
    const auto& e = curve_sets[i];
    CurveSet cs;
    cs.name = entry_name(e, where);
    try {
      cs.points = strings_from_json(require(e, "points", where));
      for (const auto& r : require(e, "records", where)) {
        cs.records.push_back(record_from_json(r));
      }
    } catch (const std::exception& ex) {
      throw ScenarioError(where + " (" + cs.name + "): " + ex.what());
    }
    std::set<std::string> seen;
    for (const auto& r : cs.records) {
      if (r.mults.size() != cs.points.size()) {
        throw ScenarioError(where + " (" + cs.name + "): curve " + r.label + " has " +
                            std::to_string(r.mults.size()) + " multiplicities for " +
                            std::to_string(cs.points.size()) + " points");
      }
      if (!seen.insert(r.label).second) {
        throw ScenarioError(where + " (" + cs.name + "): duplicate curve " + r.label);
      }
    }
    if (!curves_.emplace(cs.name, cs).second) {
      throw ScenarioError(where + ": duplicate curve set '" + cs.name + "'");
    }
  }
  const auto& invs = section(scenario_, "involutions");
  for (std::size_t i = 0; i < invs.size(); ++i) {
    const std::string where = "involutions[" + std::to_string(i) + "]";
    InvolutionEntry inv;
    inv.name = entry_name(invs[i], where);
    try {
      inv.lattice = require(invs[i], "lattice", where).get<std::string>();
      inv.spec = involution_from_json(invs[i]);
      inv.spec.orbits();
    } catch (const std::exception& ex) {
      throw ScenarioError(where + " (" + inv.name + "): " + ex.what());
    }
    inv.lefschetz = invs[i].value("lefschetz", json());
    if (!involutions_.emplace(inv.name, inv).second) {
      throw ScenarioError(where + ": duplicate involution '" + inv.name + "'");
    }
  }

  // Cross references.
  for (const auto& [n, e] : lattice_entries_) {
    const std::string where = "lattice '" + n + "'";
    const int kinds = static_cast<int>(e.contains("gram")) +
                      static_cast<int>(e.contains("sublattice_of")) +
                      static_cast<int>(e.contains("involution_quotient"));
    if (kinds != 1) {
      throw ScenarioError(where + ": needs exactly one of gram, sublattice_of, involution_quotient");
    }
    if (e.contains("gram")) {
      try {
        lattices_[n] = lattice_from_json(e);
      } catch (const std::exception& ex) {
        throw ScenarioError(where + ": " + ex.what());
      }
    }
    if (e.contains("sublattice_of") && !has_lattice(e.at("sublattice_of").get<std::string>())) {
      throw ScenarioError(where + ": unknown parent lattice '" +
                          e.at("sublattice_of").get<std::string>() + "'");
    }
    if (e.contains("sublattice_of") && !e.contains("basis")) {
      throw ScenarioError(where + ": sublattice needs a basis");
    }
    if (e.contains("involution_quotient") &&
        !has_involution(e.at("involution_quotient").get<std::string>())) {
      throw ScenarioError(where + ": unknown involution '" +
                          e.at("involution_quotient").get<std::string>() + "'");
    }
    if (e.contains("embed_from") && !has_lattice(e.at("embed_from").get<std::string>())) {
      throw ScenarioError(where + ": unknown lattice '" + e.at("embed_from").get<std::string>() +
                          "' in embed_from");
    }
  }
  for (const auto& [n, e] : quotient_entries_) {
    const std::string where = "quotient '" + n + "'";
    for (const char* key : {"source", "curves", "order", "points"}) {
      if (!e.contains(key)) {
        throw ScenarioError(where + ": missing \"" + key + "\"");
      }
    }
    if (!has_lattice(e.at("source").get<std::string>())) {
      throw ScenarioError(where + ": unknown source lattice '" + e.at("source").get<std::string>() +
                          "'");
    }
    if (!has_curves(e.at("curves").get<std::string>())) {
      throw ScenarioError(where + ": unknown curve set '" + e.at("curves").get<std::string>() + "'");
    }
    try {
      for (const auto& p : e.at("points")) {
        point_from_json(p);
      }
    } catch (const std::exception& ex) {
      throw ScenarioError(where + ": " + ex.what());
    }
  }
  for (const auto& [n, inv] : involutions_) {
    if (!has_lattice(inv.lattice)) {
      throw ScenarioError("involution '" + n + "': unknown lattice '" + inv.lattice + "'");
    }
  }

  if (!scenario_.contains("assertions")) {
    throw ScenarioError("scenario has no \"assertions\"");
  }
  const auto& asserts = section(scenario_, "assertions");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < asserts.size(); ++i) {
    const auto& a = asserts[i];
    std::string where = "assertions[" + std::to_string(i) + "]";
    if (!a.is_object() || !a.contains("id") || !a.at("id").is_string()) {
      throw ScenarioError(where + ": missing \"id\"");
    }
    where += " (" + a.at("id").get<std::string>() + ")";
    if (!ids.insert(a.at("id").get<std::string>()).second) {
      throw ScenarioError(where + ": duplicate id");
    }
    validate_assertion(a, where);
  }
}

void Workspace::validate_assertion(const json& a, const std::string& where) {
  if (!a.contains("kind") || !a.at("kind").is_string()) {
    throw ScenarioError(where + ": missing \"kind\"");
  }
  const auto kind = a.at("kind").get<std::string>();
  if (!known_assertion_kinds().count(kind)) {
    throw ScenarioError(where + ": unknown kind '" + kind + "'");
  }
  auto check = [&](const char* key, auto&& exists, const char* what) {
    if (!a.contains(key)) {
      return;
    }
    if (!a.at(key).is_string() || !exists(a.at(key).get<std::string>())) {
      throw ScenarioError(where + ": unknown " + what + " " + a.at(key).dump());
    }
  };
  auto lat = [&](const std::string& n) { return has_lattice(n); };
  check("lattice", lat, "lattice");
  check("ns_lattice", lat, "lattice");
  check("sublattice", lat, "lattice");
  check("curves", [&](const std::string& n) { return has_curves(n); }, "curve set");
  check("quotient", [&](const std::string& n) { return has_quotient(n); }, "quotient");
  check("involution", [&](const std::string& n) { return has_involution(n); }, "involution");

  if (kind == "quotient_table" || kind == "involution_quotient_table") {
    const auto labels = a.contains("labels") ? a.at("labels") : json();
    if (!a.contains("expected") || !symmetric_table(a.at("expected")) || !labels.is_array() ||
        labels.size() != a.at("expected").size()) {
      throw ScenarioError(where + ": expected table must be symmetric with one row per label");
    }
  }
  // Labels of explicit lattices can be checked before anything is built.
  if (kind == "multiplicity_table") {
    const auto& cs = curves_.at(require(a, "curves", where).get<std::string>());
    const auto lname = require(a, "lattice", where).get<std::string>();
    for (const auto& pr : require(a, "entries", where)) {
      for (const auto& l : strings_from_json(pr)) {
        bool found = false;
        for (const auto& r : cs.records) {
          found = found || r.label == l;
        }
        if (!found) {
          throw ScenarioError(where + ": curve set has no curve '" + l + "'");
        }
        if (lattices_.count(lname) && !lattices_.at(lname)->contains(l)) {
          throw ScenarioError(where + ": lattice '" + lname + "' has no label '" + l + "'");
        }
      }
    }
  }
}

bool Workspace::has_lattice(const std::string& name) const {
  return lattice_entries_.count(name) != 0 || quotient_entries_.count(name) != 0;
}

LatticePtr Workspace::lattice(const std::string& name) {
  if (const auto it = lattices_.find(name); it != lattices_.end()) {
    return it->second;
  }
  if (quotient_entries_.count(name)) {
    return quotient(name).lattice;
  }
  const auto e = lattice_entries_.find(name);
  if (e == lattice_entries_.end()) {
    throw std::invalid_argument("unknown lattice '" + name + "'");
  }
  if (!building_.insert(name).second) {
    throw std::invalid_argument("lattice '" + name + "' depends on itself");
  }
  struct Guard {
    std::set<std::string>& s;
    std::string n;
    ~Guard() { s.erase(n); }
  } guard{building_, name};

  const json& j = e->second;
  LatticePtr out;
  if (j.contains("sublattice_of")) {
    const auto parent = lattice(j.at("sublattice_of").get<std::string>());
    out = sublattice(*parent, strings_from_json(j.at("basis")), name);
  } else {
    const auto& inv = involution(j.at("involution_quotient").get<std::string>());
    out = quotient::free_involution_quotient(*lattice(inv.lattice), inv.spec, name);
  }
  lattices_[name] = out;
  return out;
}

void Workspace::apply_definitions(NamedClasses& classes, const json& entry) {
  if (entry.contains("embed_from")) {
    const auto parent = lattice(entry.at("embed_from").get<std::string>());
    const auto& basis = classes.lattice()->basis();
    for (const auto& label : parent->basis()) {
      if (classes.contains(label)) {
        continue;
      }
      RationalVector pairings;
      for (const auto& b : basis) {
        pairings.push_back(parent->pairing(label, b));
      }
      classes.embed_by_pairings(label, pairings);
    }
  }
  if (entry.contains("define")) {
    for (const auto& d : entry.at("define")) {
      const auto v = strings_from_json(d);
      if (v.size() != 2) {
        throw std::invalid_argument("definition must be [label, expression]");
      }
      classes.define(v[0], classes.evaluate(v[1]));
    }
  }
}

const NamedClasses& Workspace::classes(const std::string& lattice_name) {
  if (const auto it = classes_.find(lattice_name); it != classes_.end()) {
    return *it->second;
  }
  auto nc = std::make_unique<NamedClasses>(lattice(lattice_name));
  if (const auto e = lattice_entries_.find(lattice_name); e != lattice_entries_.end()) {
    apply_definitions(*nc, e->second);
  } else if (const auto q = quotient_entries_.find(lattice_name); q != quotient_entries_.end()) {
    apply_definitions(*nc, q->second);
  }
  return *(classes_[lattice_name] = std::move(nc));
}

const CurveSet& Workspace::curves(const std::string& name) const {
  const auto it = curves_.find(name);
  if (it == curves_.end()) {
    throw std::invalid_argument("unknown curve set '" + name + "'");
  }
  return it->second;
}

const quotient::QuotientLattice& Workspace::quotient(const std::string& name) {
  if (const auto it = quotients_.find(name); it != quotients_.end()) {
    return it->second;
  }
  const auto e = quotient_entries_.find(name);
  if (e == quotient_entries_.end()) {
    throw std::invalid_argument("unknown quotient '" + name + "'");
  }
  const json& j = e->second;
  quotient::CyclicQuotientSetup setup;
  setup.name = name;
  setup.order = long_from_json(j.at("order"));
  for (const auto& p : j.at("points")) {
    setup.points.push_back(point_from_json(p));
  }
  setup.curves = curves(j.at("curves").get<std::string>()).records;
  setup.source = lattice(j.at("source").get<std::string>());
  setup.transform_suffix = j.value("suffix", std::string("'"));
  auto q = quotient::build_quotient_lattice(setup);
  lattices_[name] = q.lattice;
  return quotients_[name] = std::move(q);
}

const InvolutionEntry& Workspace::involution(const std::string& name) const {
  const auto it = involutions_.find(name);
  if (it == involutions_.end()) {
    throw std::invalid_argument("unknown involution '" + name + "'");
  }
  return it->second;
}

DivisorClass Workspace::evaluate(const std::string& lattice_name, const std::string& expression) {
  return classes(lattice_name).evaluate(expression);
}

}  // namespace surfcalc::replay
