#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "surfcalc/exact/matrix.hpp"
#include "surfcalc/lefschetz/action.hpp"
#include "surfcalc/lefschetz/elimination.hpp"
#include "surfcalc/quotient/hj_chain.hpp"
#include "surfcalc/replay/replay.hpp"
#include "surfcalc/search/class_search.hpp"
#include "surfcalc/search/reider.hpp"

namespace surfcalc::replay {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::assumed:
      return "assumed";
  }
  return "?";
}

bool ReplayReport::pass() const {
  return std::none_of(assertions.begin(), assertions.end(),
                      [](const AssertionResult& a) { return a.status == Status::fail; });
}

const AssertionResult* ReplayReport::find(const std::string& id) const {
  for (const auto& a : assertions) {
    if (a.id == id) {
      return &a;
    }
  }
  return nullptr;
}

int exit_code(const ReplayReport& report) { return report.pass() ? 0 : 1; }

namespace {

struct Outcome {
  std::string computed;
  std::string expected;
  bool ok = false;
};

using Handler = std::function<Outcome(Workspace&, const json&)>;

std::string str(const json& a, const char* key) { return require(a, key, "assertion").get<std::string>(); }

long num(const json& a, const char* key) { return long_from_json(require(a, key, "assertion")); }

Rational rat(const json& a, const char* key) { return rational_from_json(require(a, key, "assertion")); }

std::string tuple(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    s += (i ? "," : "") + parts[i];
  }
  return s + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    s += (i ? sep : "") + parts[i];
  }
  return s;
}

/// [[label, value], ...] pairs of an "expected" member.
std::vector<std::pair<std::string, Rational>> labelled_values(const json& a) {
  std::vector<std::pair<std::string, Rational>> out;
  for (const auto& e : require(a, "expected", "assertion")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("expected entries must be [label, value]");
    }
    out.emplace_back(e[0].get<std::string>(), rational_from_json(e[1]));
  }
  return out;
}

/// Compares label -> computed against label -> expected, reporting the values
/// in expected order.
Outcome compare_labelled(const std::vector<std::pair<std::string, Rational>>& expected,
                         const std::function<Rational(const std::string&)>& compute) {
  Outcome o;
  std::vector<std::string> got;
  std::vector<std::string> want;
  o.ok = true;
  for (const auto& [label, value] : expected) {
    const Rational c = compute(label);
    got.push_back(c.to_string());
    want.push_back(value.to_string());
    o.ok = o.ok && c == value;
  }
  o.computed = tuple(got);
  o.expected = tuple(want);
  return o;
}

Rational adjunction_genus(const DivisorClass& c, const DivisorClass& k) {
  return Rational(1) + (pair(c, c) + pair(k, c)) / Rational(2);
}

RationalMatrix gram_on(const IntersectionLattice& l, const std::vector<std::string>& labels) {
  RationalMatrix m(labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      m(i, j) = l.pairing(labels[i], labels[j]);
    }
  }
  return m;
}

std::vector<std::string> record_labels(const CurveSet& cs) {
  std::vector<std::string> out;
  for (const auto& r : cs.records) {
    out.push_back(r.label);
  }
  return out;
}

std::string describe_mismatches(const curves::TableReport& r) {
  std::vector<std::string> parts;
  for (const auto& e : r.mismatched()) {
    parts.push_back(e.row + "." + e.col + " computed " + e.computed.to_string() + ", expected " +
                    e.expected.to_string());
  }
  return join(parts, "; ");
}

/// Entry-by-entry comparison of the pairings among `labels` on `lattice`.
Outcome compare_table(const IntersectionLattice& lattice, const json& a) {
  const auto labels = strings_from_json(require(a, "labels", "assertion"));
  const auto expected = matrix_from_json(require(a, "expected", "assertion"));
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const Rational& c = lattice.pairing(labels[i], labels[j]);
      if (c != expected(i, j)) {
        bad.push_back(labels[i] + "." + labels[j] + " computed " + c.to_string() + ", expected " +
                      expected(i, j).to_string());
      }
    }
  }
  const std::size_t n = labels.size() * labels.size();
  Outcome o;
  o.ok = bad.empty();
  o.computed = std::to_string(n - bad.size()) + "/" + std::to_string(n) + " entries match";
  if (!bad.empty()) {
    o.computed += ": " + join(bad, "; ");
  }
  o.expected = std::to_string(n) + "/" + std::to_string(n) + " entries match";
  return o;
}

Outcome multiplicity_table(Workspace& ws, const json& a) {
  const auto& cs = ws.curves(str(a, "curves"));
  const auto lat = ws.lattice(str(a, "lattice"));
  std::vector<std::pair<std::string, std::string>> only;
  for (const auto& e : require(a, "entries", "assertion")) {
    const auto v = strings_from_json(e);
    only.emplace_back(v.at(0), v.at(1));
  }
  const auto report =
      curves::verify_table(cs.records, gram_on(*lat, record_labels(cs)), curves::ExtraMeetings{}, only);
  const std::size_t n = report.entries.size();
  Outcome o;
  o.ok = report.mismatches() == 0 && n == only.size();
  o.computed = std::to_string(n - report.mismatches()) + "/" + std::to_string(n) + " entries match";
  if (report.mismatches()) {
    o.computed += ": " + describe_mismatches(report);
  }
  o.expected = std::to_string(only.size()) + "/" + std::to_string(only.size()) + " entries match";
  return o;
}

Outcome back_solved_consistency(Workspace& ws, const json& a) {
  const auto& cs = ws.curves(str(a, "curves"));
  const auto lat_name = str(a, "lattice");
  const auto lat = ws.lattice(lat_name);
  const auto gram = gram_on(*lat, record_labels(cs));
  const auto extras = curves::back_solve_extras(cs.records, gram);
  auto records = cs.records;
  for (auto& r : records) {
    if (const auto it = extras.nodes.find(r.label); it != extras.nodes.end()) {
      r.extra_nodes = it->second;
    }
  }
  const auto table = curves::verify_table(records, gram, extras.meetings);
  if (table.mismatches()) {
    return {"table inconsistent: " + describe_mismatches(table), "consistent", false};
  }
  const auto& classes = ws.classes(lat_name);
  const auto k = classes.evaluate(str(a, "canonical"));
  std::vector<std::string> mismatch;
  auto o = compare_labelled(labelled_values(a), [&](const std::string& label) {
    const Rational pa = adjunction_genus(classes.at(label), k);
    for (const auto& r : records) {
      if (r.label == label && Rational(curves::genus_with_singularities(r)) != pa) {
        mismatch.push_back(label);
      }
    }
    return pa;
  });
  if (!mismatch.empty()) {
    o.ok = false;
    o.computed += ", geometric genus plus singularities differs for " + join(mismatch, ",");
  }
  return o;
}

Outcome canonical_degree(Workspace& ws, const json& a) {
  const auto& cs = ws.curves(str(a, "curves"));
  const auto lat_name = str(a, "lattice");
  const auto& classes = ws.classes(lat_name);
  const auto k = classes.evaluate(str(a, "canonical"));
  std::vector<std::pair<std::string, Rational>> expected;
  for (const auto& r : cs.records) {
    expected.emplace_back(r.label, Rational(curves::canonical_degree(r)));
  }
  return compare_labelled(expected,
                          [&](const std::string& label) { return pair(k, classes.at(label)); });
}

Outcome equivalences(Workspace& ws, const json& a) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : require(a, "pairs", "assertion")) {
    const auto v = strings_from_json(p);
    pairs.emplace_back(v.at(0), v.at(1));
  }
  const auto checks = quotient::verify_equivalences(ws.classes(str(a, "lattice")), pairs);
  std::vector<std::string> failed;
  for (const auto& c : checks) {
    if (!c.holds) {
      failed.push_back(c.lhs + " ~ " + c.rhs);
    }
  }
  Outcome o;
  o.ok = failed.empty();
  o.computed = std::to_string(checks.size() - failed.size()) + "/" + std::to_string(checks.size()) + " hold";
  if (!failed.empty()) {
    o.computed += ", failing: " + join(failed, "; ");
  }
  o.expected = std::to_string(checks.size()) + "/" + std::to_string(checks.size()) + " hold";
  return o;
}

Outcome adjunction(Workspace& ws, const json& a) {
  const auto& classes = ws.classes(str(a, "lattice"));
  const auto k = classes.evaluate(str(a, "canonical"));
  return compare_labelled(labelled_values(a), [&](const std::string& label) {
    return adjunction_genus(classes.evaluate(label), k);
  });
}

Outcome class_pairings(Workspace& ws, const json& a) {
  const auto& classes = ws.classes(str(a, "lattice"));
  const auto d = classes.evaluate(str(a, "class"));
  return compare_labelled(labelled_values(a),
                          [&](const std::string& label) { return pair(d, classes.evaluate(label)); });
}

Outcome determinant_of(Workspace& ws, const json& a) {
  const Rational d = determinant(ws.lattice(str(a, "lattice"))->gram());
  const Rational e = rat(a, "expected");
  return {d.to_string(), e.to_string(), d == e};
}

Outcome noether(Workspace&, const json& a) {
  const auto n = quotient::noether_invariants(num(a, "k2"), num(a, "chi"), num(a, "q"), num(a, "pg"));
  const auto& e = require(a, "expected", "assertion");
  const quotient::NoetherInvariants want{long_from_json(e.at(0)), long_from_json(e.at(1)),
                                         long_from_json(e.at(2))};
  auto show = [](const quotient::NoetherInvariants& v) {
    return "(e,b2,h11)=" + tuple({std::to_string(v.euler_number), std::to_string(v.b2),
                                  std::to_string(v.h11)});
  };
  return {show(n), show(want), n == want};
}

/// Cases with L = K whose curve B could exist on a ball quotient: the
/// arithmetic genus 1 + (B^2 + K.B)/2 must be an integer of at least 2.
Outcome reider(Workspace&, const json& a) {
  const auto part_name = str(a, "part");
  if (part_name != "basepoint" && part_name != "separation") {
    throw std::invalid_argument("part must be basepoint or separation");
  }
  const auto part = part_name == "basepoint" ? search::ReiderPart::basepoint : search::ReiderPart::separation;
  std::vector<std::string> survivors;
  for (const auto& c : search::reider_cases(static_cast<int>(num(a, "l_squared")), part)) {
    for (int b2 : c.b2_options) {
      const Rational pa = Rational(1) + Rational(b2 + c.bl) / Rational(2);
      if (pa.is_integer() && pa >= Rational(2)) {
        survivors.push_back(search::to_string(search::ReiderCase{c.bl, {b2}, c.numerically_three_b}));
      }
    }
  }
  const auto want = strings_from_json(require(a, "expected", "assertion"));
  return {"[" + join(survivors, ", ") + "]", "[" + join(want, ", ") + "]", survivors == want};
}

Outcome class_search(Workspace& ws, const json& a) {
  const auto& classes = ws.classes(str(a, "lattice"));
  const auto lat = classes.lattice();
  const Integer kd = integer_from_json(require(a, "kd", "assertion"));
  const Integer d2 = integer_from_json(require(a, "d2", "assertion"));
  const auto found = search::enumerate_classes({lat, kd, d2});

  // Box oracle over integral pairings with the first and last basis vector.
  const long radius = num(a, "oracle_radius");
  std::vector<DivisorClass> box;
  for (long x = -radius; x <= radius; ++x) {
    for (long z = -radius; z <= radius; ++z) {
      const RationalVector p{Rational(x), Rational(kd), Rational(z)};
      auto d = coords_from_pairings(lat, p);
      if (pair(d, d) == Rational(d2)) {
        box.push_back(std::move(d));
      }
    }
  }
  std::vector<DivisorClass> want;
  for (const auto& e : strings_from_json(require(a, "expected", "assertion"))) {
    want.push_back(classes.evaluate(e));
  }
  auto same_set = [](const std::vector<DivisorClass>& x, const std::vector<DivisorClass>& y) {
    if (x.size() != y.size()) {
      return false;
    }
    return std::all_of(x.begin(), x.end(), [&](const DivisorClass& d) {
      return std::find(y.begin(), y.end(), d) != y.end();
    });
  };
  std::vector<DivisorClass> found_classes;
  std::vector<std::string> shown;
  for (const auto& s : found) {
    found_classes.push_back(s.divisor);
    shown.push_back(s.divisor.to_string());
  }
  Outcome o;
  const bool oracle = same_set(found_classes, box);
  o.ok = oracle && same_set(found_classes, want);
  o.computed = std::to_string(found.size()) + " classes: " + join(shown, ", ") +
               (oracle ? "; box search agrees" : "; box search finds " + std::to_string(box.size()));
  std::vector<std::string> want_shown;
  for (const auto& d : want) {
    want_shown.push_back(d.to_string());
  }
  o.expected = std::to_string(want.size()) + " classes: " + join(want_shown, ", ") + "; box search agrees";
  return o;
}

Outcome profile(Workspace& ws, const json& a) {
  const auto& classes = ws.classes(str(a, "lattice"));
  std::vector<DivisorClass> against;
  for (const auto& l : strings_from_json(require(a, "against", "assertion"))) {
    against.push_back(classes.evaluate(l));
  }
  const auto got = search::pairing_profile(classes.evaluate(str(a, "class")), against);
  RationalVector want;
  for (const auto& v : require(a, "expected", "assertion")) {
    want.push_back(rational_from_json(v));
  }
  return {surfcalc::to_string(got), surfcalc::to_string(want), got == want};
}

std::string integrality_note(const Rational& v) {
  return v.to_string() + (v.is_integer() ? " (integral)" : " (non-integral)");
}

Outcome pairing(Workspace& ws, const json& a) {
  const auto& classes = ws.classes(str(a, "lattice"));
  const auto v = search::integrality_obstruction(classes.evaluate(str(a, "lhs")),
                                                 classes.evaluate(str(a, "rhs")));
  const Rational want = rat(a, "expected");
  const bool integral = require(a, "integral", "assertion").get<bool>();
  return {integrality_note(v.value),
          want.to_string() + (integral ? " (integral)" : " (non-integral)"),
          v.value == want && v.obstructed == !integral};
}

Outcome hj(Workspace&, const json& a) {
  const long n = num(a, "n");
  const long q = num(a, "a");
  const auto chain = quotient::hj_chain(n, q);
  std::vector<std::string> got;
  for (long c : chain.self_intersections) {
    got.push_back(std::to_string(c));
  }
  std::vector<std::string> want;
  for (const auto& v : require(a, "expected", "assertion")) {
    want.push_back(std::to_string(long_from_json(v)));
  }
  const bool round_trip = quotient::continued_fraction_value(chain.self_intersections) == Rational(n, q);
  return {tuple(got) + (round_trip ? "" : ", continued fraction mismatch"), tuple(want),
          got == want && round_trip};
}

Outcome quotient_table(Workspace& ws, const json& a) {
  return compare_table(*ws.quotient(str(a, "quotient")).lattice, a);
}

Outcome involution_quotient_table(Workspace& ws, const json& a) {
  return compare_table(*ws.lattice(str(a, "lattice")), a);
}

Outcome canonical(Workspace& ws, const json& a) {
  const auto name = str(a, "quotient");
  const auto& q = ws.quotient(name);
  const auto k = quotient::canonical_on_resolution(q, parse_combination(str(a, "source_canonical")));
  const auto want = ws.evaluate(name, str(a, "expected"));
  const Rational k2 = rat(a, "self_intersection");
  return {k.to_string() + ", K^2 = " + pair(k, k).to_string(),
          want.to_string() + ", K^2 = " + k2.to_string(), k == want && pair(k, k) == k2};
}

Outcome riemann_hurwitz(Workspace& ws, const json& a) {
  const auto& cs = ws.curves(str(a, "curves"));
  const long order = num(a, "order");
  return compare_labelled(labelled_values(a), [&](const std::string& label) {
    const auto& r = cs.at(label);
    long fixed = 0;
    for (long m : r.mults) {
      fixed += m;
    }
    return Rational(quotient::quotient_genus(r.genus, order, fixed));
  });
}

Outcome rank_of(Workspace& ws, const json& a) {
  const auto full = rank(ws.lattice(str(a, "lattice"))->gram());
  const auto sub = ws.lattice(str(a, "sublattice"));
  const auto sub_rank = rank(sub->gram());
  const auto want = static_cast<std::size_t>(num(a, "expected"));
  return {"rank " + std::to_string(full) + ", " + std::to_string(sub_rank) + " of " +
              std::to_string(sub->rank()) + " chosen curves independent",
          "rank " + std::to_string(want) + ", " + std::to_string(want) + " of " + std::to_string(want) +
              " chosen curves independent",
          full == want && sub_rank == want && sub->rank() == want};
}

Outcome pullback_of(Workspace& ws, const json& a) {
  const auto name = str(a, "quotient");
  const auto p = quotient::pullback(ws.quotient(name), parse_combination(str(a, "image")));
  const auto want = ws.evaluate(name, str(a, "expected"));
  return {p.to_string(), want.to_string(), p == want};
}

Outcome integral_pairings(Workspace& ws, const json& a) {
  const auto d = ws.evaluate(str(a, "lattice"), str(a, "class"));
  const auto p = pairings_with_basis(d);
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_integer()) {
      bad.push_back(d.lattice()->basis()[i] + ": " + p[i].to_string());
    }
  }
  const auto n = std::to_string(p.size());
  return {bad.empty() ? "integral against all " + n + " curves" : "non-integral: " + join(bad, ", "),
          "integral against all " + n + " curves", bad.empty()};
}

Outcome alpha_candidates(Workspace& ws, const json& a) {
  const auto& classes = ws.classes(str(a, "lattice"));
  const auto& inv = ws.involution(str(a, "involution"));
  lefschetz::CandidateProblem problem{str(a, "curve"), strings_from_json(require(a, "support", "assertion")),
                                      strings_from_json(require(a, "test_curves", "assertion")),
                                      strings_from_json(require(a, "residual", "assertion")),
                                      str(a, "parameter")};
  const auto r = lefschetz::alpha_candidates(classes, inv.spec, problem);
  RationalVector quad{r.lead, r.linear, r.constant};
  RationalVector want_quad;
  for (const auto& v : require(a, "expected_quadratic", "assertion")) {
    want_quad.push_back(rational_from_json(v));
  }
  std::vector<DivisorClass> want;
  std::vector<std::string> want_shown;
  for (const auto& e : strings_from_json(require(a, "expected", "assertion"))) {
    want.push_back(classes.evaluate(e));
    want_shown.push_back(want.back().to_string());
  }
  std::vector<std::string> shown;
  for (const auto& c : r.candidates) {
    shown.push_back(c.to_string());
  }
  bool same = r.candidates.size() == want.size();
  for (const auto& c : r.candidates) {
    same = same && std::find(want.begin(), want.end(), c) != want.end();
  }
  return {"quadratic " + surfcalc::to_string(quad) + "; " + join(shown, ", "),
          "quadratic " + surfcalc::to_string(want_quad) + "; " + join(want_shown, ", "),
          same && quad == want_quad};
}

Outcome action_trace(Workspace& ws, const json& a) {
  const auto& classes = ws.classes(str(a, "lattice"));
  const auto& inv = ws.involution(str(a, "involution"));
  std::map<std::string, DivisorClass> overrides;
  for (const auto& e : require(a, "images", "assertion")) {
    const auto v = strings_from_json(e);
    overrides.emplace(v.at(0), classes.evaluate(v.at(1)));
  }
  const Rational t = lefschetz::build_action(classes, inv.spec, overrides).trace();
  const Rational want = rat(a, "expected");
  return {t.to_string(), want.to_string(), t == want};
}

int sign_of(const json& a) {
  const long s = num(a, "sign");
  if (s != 1 && s != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  return static_cast<int>(s);
}

Outcome topological(Workspace&, const json& a) {
  const long e = lefschetz::topological_constraint(num(a, "trace"), sign_of(a));
  const long want = num(a, "expected");
  return {"e = " + std::to_string(e), "e = " + std::to_string(want), e == want};
}

lefschetz::ClassAnsatz ansatz_from_json(const json& j) {
  lefschetz::ClassAnsatz out;
  out.variables = strings_from_json(require(j, "variables", "ansatz"));
  for (const auto& g : strings_from_json(require(j, "generators", "ansatz"))) {
    out.generators.push_back(parse_combination(g));
  }
  out.test_curves = strings_from_json(require(j, "test_curves", "ansatz"));
  return out;
}

lefschetz::AffineCount count_from_json(const json& j) {
  return {j.contains("constant") ? long_from_json(j.at("constant")) : 0,
          j.contains("per_m") ? long_from_json(j.at("per_m")) : 0};
}

Outcome lefschetz_case(Workspace& ws, const json& a) {
  const auto& inv = ws.involution(str(a, "involution"));
  if (inv.lefschetz.is_null()) {
    throw std::invalid_argument("involution " + inv.name + " has no lefschetz data");
  }
  const json& L = inv.lefschetz;
  const auto strategy_name = str(a, "strategy");
  lefschetz::CaseSpec spec;
  spec.label = a.at("id").get<std::string>();
  spec.trace = num(a, "trace");
  spec.h20_sign = sign_of(a);
  if (strategy_name == "determinant") {
    spec.strategy = lefschetz::Strategy::determinant;
  } else if (strategy_name == "diophantine") {
    spec.strategy = lefschetz::Strategy::diophantine;
  } else if (strategy_name == "class_solve") {
    spec.strategy = lefschetz::Strategy::class_solve;
  } else {
    throw std::invalid_argument("unknown strategy '" + strategy_name + "'");
  }

  lefschetz::CaseContext ctx;
  ctx.classes = &ws.classes(require(L, "lattice", "lefschetz").get<std::string>());
  switch (spec.strategy) {
    case lefschetz::Strategy::class_solve:
      ctx.ansatz = ansatz_from_json(require(L, "ansatz", "lefschetz"));
      for (const auto& t : require(L, "targets", "lefschetz")) {
        RationalVector v;
        for (const auto& x : t) {
          v.push_back(rational_from_json(x));
        }
        ctx.target_branches.push_back(std::move(v));
      }
      break;
    case lefschetz::Strategy::diophantine:
      ctx.reduced_ansatz = ansatz_from_json(require(L, "reduced_ansatz", "lefschetz"));
      ctx.canonical = parse_combination(require(L, "canonical", "lefschetz").get<std::string>());
      if (L.contains("modulus")) {
        ctx.modulus = long_from_json(L.at("modulus"));
      }
      break;
    case lefschetz::Strategy::determinant:
      for (const auto& b : require(L, "blocks", "lefschetz")) {
        lefschetz::DeterminantBlock block;
        block.name = b.value("name", std::string("block"));
        if (b.contains("gram")) {
          block.gram = matrix_from_json(b.at("gram"));
        } else if (b.contains("hj")) {
          block.gram = quotient::hj_chain(long_from_json(b.at("hj").at(0)), long_from_json(b.at("hj").at(1))).gram();
        } else {
          block.gram = ws.lattice(require(b, "lattice", "block").get<std::string>())->gram();
        }
        block.count = count_from_json(require(b, "count", "block"));
        ctx.determinant_blocks.push_back(std::move(block));
      }
      break;
  }

  const auto r = lefschetz::analyse_case(spec, ctx);
  Outcome o;
  o.computed = r.outcome + " [" + join(r.constraints, "; ") + "; " + r.certificate + "]";
  o.expected = str(a, "expected");
  o.ok = r.outcome == o.expected;
  if (a.contains("expected_certificate")) {
    const auto c = str(a, "expected_certificate");
    o.expected += " [" + c + "]";
    o.ok = o.ok && r.certificate == c;
  }
  if (a.contains("expected_equation")) {
    const auto e = str(a, "expected_equation");
    o.expected += " [" + e + "]";
    o.ok = o.ok && std::find(r.constraints.begin(), r.constraints.end(), e) != r.constraints.end();
  }
  return o;
}

Outcome diophantine_search(Workspace&, const json& a) {
  const auto& e = require(a, "equation", "assertion");
  const lefschetz::DiophantineEquation eq{integer_from_json(e.at(0)), integer_from_json(e.at(1)),
                                          integer_from_json(e.at(2)), integer_from_json(e.at(3))};
  const long bound = num(a, "bound");
  const auto sols = lefschetz::brute_force_solutions(eq, bound);
  const long want = num(a, "expected");
  auto show = [&](std::size_t n) {
    return std::to_string(n) + " solutions of " + eq.to_string() + " with |x|,|m| <= " + std::to_string(bound);
  };
  return {show(sols.size()), show(static_cast<std::size_t>(want)), static_cast<long>(sols.size()) == want};
}

Outcome descend(Workspace& ws, const json& a) {
  const auto& inv = ws.involution(str(a, "involution"));
  const auto target = str(a, "lattice");
  const auto d = ws.evaluate(inv.lattice, str(a, "class"));
  const auto down = quotient::descend_class(inv.spec, d, ws.lattice(target));
  const auto want = ws.evaluate(target, str(a, "expected"));
  return {down.to_string(), want.to_string(), down == want};
}

Outcome contradiction_outcome(Workspace& ws, const json& a) {
  const auto r = contradiction_pairing(ws, a);
  const Rational want = rat(a, "expected");
  const bool integral = require(a, "integral", "assertion").get<bool>();
  const Rational want_sq = rat(a, "self_intersection");
  return {integrality_note(r.pairing) + ", P^2 = " + r.self_intersection.to_string(),
          want.to_string() + (integral ? " (integral)" : " (non-integral)") + ", P^2 = " + want_sq.to_string(),
          r.pairing == want && r.pairing.is_integer() == integral && r.self_intersection == want_sq};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"multiplicity_table", multiplicity_table},
      {"back_solved_consistency", back_solved_consistency},
      {"canonical_degree", canonical_degree},
      {"equivalences", equivalences},
      {"adjunction", adjunction},
      {"class_pairings", class_pairings},
      {"determinant", determinant_of},
      {"noether", noether},
      {"reider", reider},
      {"class_search", class_search},
      {"profile", profile},
      {"pairing", pairing},
      {"hj_chain", hj},
      {"quotient_table", quotient_table},
      {"involution_quotient_table", involution_quotient_table},
      {"canonical", canonical},
      {"riemann_hurwitz", riemann_hurwitz},
      {"rank", rank_of},
      {"pullback", pullback_of},
      {"integral_pairings", integral_pairings},
      {"alpha_candidates", alpha_candidates},
      {"action_trace", action_trace},
      {"topological", topological},
      {"lefschetz_case", lefschetz_case},
      {"diophantine_search", diophantine_search},
      {"descend", descend},
      {"contradiction_pairing", contradiction_outcome},
  };
  return h;
}

}  // namespace

const std::set<std::string>& known_assertion_kinds() {
  static const std::set<std::string> kinds = [] {
    std::set<std::string> k{"assumed"};
    for (const auto& [name, _] : handlers()) {
      k.insert(name);
    }
    return k;
  }();
  return kinds;
}

PairingContradiction contradiction_pairing(Workspace& ws, const json& a) {
  const auto& ns = ws.classes(str(a, "ns_lattice"));
  const auto representative = str(a, "representative");
  if (!numerically_equal(ns.evaluate(str(a, "class")), ns.evaluate(representative))) {
    throw std::domain_error(representative + " does not represent " + str(a, "class"));
  }
  const auto& q = ws.quotient(str(a, "quotient"));
  const auto& inv = ws.involution(str(a, "involution"));
  if (inv.lattice != str(a, "quotient")) {
    throw std::invalid_argument("involution " + inv.name + " does not act on " + str(a, "quotient"));
  }
  // p_* of an invariant curve is d times its image.
  const auto pushed = scale(parse_combination(representative), Rational(q.order));
  auto p = quotient::pullback(q, pushed);
  const auto moved = quotient::apply_involution(inv.spec, p);
  PairingContradiction r{p, pair(p, moved), pair(p, p)};
  return r;
}

Rational section6_contradiction(const json& scenario) {
  Workspace ws(scenario);
  for (const auto& a : scenario.at("assertions")) {
    if (a.value("kind", std::string()) == "contradiction_pairing") {
      return contradiction_pairing(ws, a).pairing;
    }
  }
  throw std::invalid_argument("scenario has no contradiction_pairing assertion");
}

json load_scenario(const std::string& name_or_path) {
  const auto names = builtin_scenario_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return builtin_scenario(name_or_path);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw ScenarioError("no built-in scenario or readable file named '" + name_or_path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError(name_or_path + ": " + e.what());
  }
}

ReplayReport run_scenario(const json& scenario) {
  Workspace ws(scenario);
  ReplayReport report;
  report.scenario = ws.name();
  for (const auto& a : scenario.at("assertions")) {
    AssertionResult r;
    r.id = a.at("id").get<std::string>();
    r.description = a.value("description", std::string());
    const auto kind = a.at("kind").get<std::string>();
    if (kind == "assumed") {
      r.computed = "assumed, not checked numerically";
      r.expected = "-";
      r.status = Status::assumed;
    } else {
      try {
        const auto o = handlers().at(kind)(ws, a);
        r.computed = o.computed;
        r.expected = o.expected;
        r.status = o.ok ? Status::pass : Status::fail;
      } catch (const std::exception& e) {
        r.computed = std::string("error: ") + e.what();
        r.expected = a.contains("expected") ? (a.at("expected").is_string() ? a.at("expected").get<std::string>()
                                                                             : a.at("expected").dump())
                                            : "-";
        r.status = Status::fail;
      }
    }
    report.assertions.push_back(std::move(r));
  }
  return report;
}

ReplayReport run_scenario(const std::string& name_or_path) { return run_scenario(load_scenario(name_or_path)); }

namespace {
// Longer computed values overflow their row instead of widening the table.
constexpr std::size_t kMaxComputedWidth = 48;
}  // namespace

std::string emit_report(const ReplayReport& report, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["scenario"] = report.scenario;
    j["overall"] = report.pass() ? "pass" : "fail";
    j["assertions"] = nlohmann::ordered_json::array();
    for (const auto& a : report.assertions) {
      nlohmann::ordered_json e;
      e["id"] = a.id;
      e["description"] = a.description;
      e["computed"] = a.computed;
      e["expected"] = a.expected;
      e["status"] = to_string(a.status);
      j["assertions"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  if (format != "text") {
    throw std::invalid_argument("unknown report format '" + format + "' (use text or json)");
  }
  std::size_t id_w = 2;
  std::size_t computed_w = 8;
  for (const auto& a : report.assertions) {
    id_w = std::max(id_w, a.id.size());
    computed_w = std::max(computed_w, std::min(a.computed.size(), kMaxComputedWidth));
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  std::ostringstream out;
  out << "scenario: " << report.scenario << "\n";
  out << pad("status", 8) << "  " << pad("id", id_w) << "  " << pad("computed", computed_w) << "  expected\n";
  out << std::string(8 + 2 + id_w + 2 + computed_w + 2 + 8, '-') << "\n";
  for (const auto& a : report.assertions) {
    out << pad(to_string(a.status), 8) << "  " << pad(a.id, id_w) << "  " << pad(a.computed, computed_w) << "  "
        << a.expected << "\n";
  }
  std::size_t passed = 0;
  std::size_t assumed = 0;
  for (const auto& a : report.assertions) {
    passed += a.status == Status::pass;
    assumed += a.status == Status::assumed;
  }
  out << "overall: " << (report.pass() ? "pass" : "fail") << " (" << passed << " passed, " << assumed
      << " assumed, " << report.assertions.size() - passed - assumed << " failed)\n";
  return out.str();
}

}  // namespace surfcalc::replay
