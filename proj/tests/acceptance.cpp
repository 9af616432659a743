// Acceptance run: one line per criterion, exact comparisons only.

#include <cstdio>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "surfcalc/exact/number_theory.hpp"
#include "surfcalc/lefschetz/action.hpp"
#include "surfcalc/lefschetz/elimination.hpp"
#include "surfcalc/replay/replay.hpp"
#include "surfcalc/search/class_search.hpp"

using namespace surfcalc;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) {
    throw Failure{what};
  }
}

template <typename A, typename B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  expect(got == want, what);
}

quotient::QuotientLattice y_quotient() { return quotient::build_quotient_lattice(fixtures::y_setup()); }

void table_from_multiplicities() {
  auto records = fixtures::x_records();
  const auto g = fixtures::x_gram();
  std::vector<std::pair<std::string, std::string>> derived;
  for (const auto* a : {"E1", "E2", "E3"}) {
    for (const auto* b : {"E1", "E2", "E3"}) {
      derived.emplace_back(a, b);
    }
  }
  derived.emplace_back("C1", "C1");
  derived.emplace_back("C2", "C2");
  const auto r = curves::verify_table(records, g, curves::ExtraMeetings{}, derived);
  expect_eq(r.entries.size(), 11u, "11 derived entries");
  expect_eq(r.mismatches(), 0u, "derived entries match");

  const auto extras = curves::back_solve_extras(records, g);
  for (auto& rec : records) {
    rec.extra_nodes = extras.nodes.at(rec.label);
  }
  expect_eq(curves::verify_table(records, g, extras.meetings).mismatches(), 0u, "remaining entries consistent");
  const std::vector<long> pa{8, 8, 10, 5, 5, 50, 50};
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto adj = curves::arithmetic_genus(g(i, i).to_integer(), g(2, i).to_integer());
    expect_eq(adj, Rational(pa[i]), "arithmetic genus of " + records[i].label);
    expect_eq(curves::genus_with_singularities(records[i]), pa[i], "delta invariant of " + records[i].label);
  }
}

void ns_determinant() {
  const auto d = determinant(fixtures::ns_x()->gram());
  expect_eq(d, Rational(324), "det = 324");
  expect_eq(is_perfect_square(d.to_integer()), std::optional<Integer>(18), "324 = 18^2");
}

void step_one_search() {
  const auto ns = fixtures::ns_x();
  const auto found = search::enumerate_classes({ns, 2, 0});
  expect_eq(found.size(), 2u, "two classes");
  const DivisorClass di(ns, {Rational(1, 9), Rational(-1, 9), Rational(2, 9)});
  const DivisorClass dii(ns, {Rational(-1, 9), Rational(5, 9), Rational(-2, 9)});
  expect((found[0].divisor == di && found[1].divisor == dii) || (found[0].divisor == dii && found[1].divisor == di),
         "coordinates (1/9)(1,-1,2) and (1/9)(-1,5,-2)");
  std::size_t box = 0;
  for (long a = -50; a <= 50; ++a) {
    for (long c = -50; c <= 50; ++c) {
      const auto d = coords_from_pairings(ns, RationalVector{a, 2, c});
      if (pair(d, d) == 0) {
        expect(d == di || d == dii, "box oracle found " + d.to_string());
        ++box;
      }
    }
  }
  expect_eq(box, 2u, "box oracle count");
}

void step_two_profile() {
  const auto x = fixtures::x_lattice();
  NamedClasses c(fixtures::ns_x());
  for (const auto* label : {"E2", "C2", "C3", "C4"}) {
    RationalVector p;
    for (const auto& b : c.lattice()->basis()) {
      p.push_back(x->pairing(label, b));
    }
    c.embed_by_pairings(label, p);
  }
  c.define("F", c.evaluate("-E1+5E2"));
  std::vector<DivisorClass> against;
  for (const auto* l : {"E1", "E2", "E3", "C1", "C2", "C3", "C4", "F"}) {
    against.push_back(c.at(l));
  }
  const auto di = c.evaluate("1/9(E1-E3+2C1)");
  expect_eq(search::pairing_profile(di, against), RationalVector{2, 2, 2, 0, 4, 8, 4, 8}, "profile of D_I");
  const auto v = search::integrality_obstruction(di, c.evaluate("1/9(-E1+5E3-2C1)"));
  expect(v.value == Rational(8, 9) && v.obstructed, "D_I.D_II = 8/9, non-integral");
}

void quotient_tables() {
  const auto q = y_quotient();
  const auto t3 = fixtures::table3();
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 10; ++j) {
      expect_eq(q.lattice->pairing(fixtures::kYLabels[i], fixtures::kYLabels[j]), t3(i, j),
                "resolved table " + fixtures::kYLabels[i] + "." + fixtures::kYLabels[j]);
    }
  }
  const auto spec = fixtures::alpha();
  quotient::validate_involution(spec, *q.lattice);
  const auto z = quotient::free_involution_quotient(*q.lattice, spec, "Z");
  const auto t4 = fixtures::table4();
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      expect_eq(z->pairing(fixtures::kZLabels[i], fixtures::kZLabels[j]), t4(i, j),
                "involution quotient table " + fixtures::kZLabels[i] + "." + fixtures::kZLabels[j]);
    }
  }
}

void canonical_and_fibre() {
  const auto q = y_quotient();
  NamedClasses c(q.lattice);
  const auto k = quotient::canonical_on_resolution(q, parse_combination("E3"));
  expect_eq(k, c.evaluate("E3'+R2"), "K_Y = E3'+R2");
  expect_eq(pair(k, k), Rational(2), "K_Y^2 = 2");
  for (const auto& label : q.lattice->basis()) {
    const auto d = c.at(label);
    const long pa = (label == "C1'" || label == "C2'") ? 1 : (label == "C3'" || label == "C4'") ? 11 : 0;
    expect_eq(pair(k, d), Rational(2 * pa - 2) - pair(d, d), "adjunction on " + label);
  }
  const auto f = quotient::pullback(q, parse_combination("-3E1+15E2"));
  expect_eq(f, c.evaluate("-3E1'+15E2'+7R1+4R2+13R3"), "F' coordinates");
  expect_eq(pair(f, f), Rational(0), "F'^2 = 0");
  expect_eq(pair(k, f), Rational(36), "K_Y.F' = 36");
  for (const auto* r : {"R1", "R2", "R3"}) {
    expect_eq(pair(f, c.at(r)), Rational(0), std::string("F'.") + r);
  }
}

void branch_traces() {
  const auto q = y_quotient();
  const auto ns = fixtures::ns_y(q.lattice);
  const auto spec = fixtures::alpha();
  expect_eq(lefschetz::build_action(ns, spec).trace(), Rational(0), "trace with C1' fixed");
  expect_eq(lefschetz::build_action(ns, spec, {{"C1'", ns.evaluate("-R3-E1'+3E3'+3R2-C1'")}}).trace(),
            Rational(-2), "trace with C1' moved");
  expect_eq(lefschetz::topological_constraint(0, -1), 0L, "e for trace 0, sign -1");
  expect_eq(lefschetz::topological_constraint(0, 1), 4L, "e for trace 0, sign +1");
  expect_eq(lefschetz::topological_constraint(-2, -1), -2L, "e for trace -2, sign -1");
  expect_eq(lefschetz::topological_constraint(-2, 1), 2L, "e for trace -2, sign +1");
}

void case_eliminations() {
  const auto q = y_quotient();
  const auto ns = fixtures::ns_y(q.lattice);
  const std::vector<lefschetz::DeterminantBlock> blocks{
      {"(-2)-curve", RationalMatrix::from_rows({{-2}}), {0, 2}},
      {"A2", quotient::hj_chain(3, 2).gram(), {3, 0}},
      {"outer", RationalMatrix::from_rows({{-1, 3}, {3, -1}}), {1, 0}}};
  const auto obs = lefschetz::nonsquare_determinant_obstruction(blocks);
  expect(obs.never_square && obs.expression() == "2^(2m+3)*3^3", "determinant 2^(2m+3)*3^3 never square");

  const lefschetz::ClassAnsatz reduced{{"x", "y"}, {parse_combination("E1'+R3"), parse_combination("E3'+R2")}, {}};
  const auto eq = lefschetz::reduce_to_diophantine(ns, reduced, parse_combination("E3'+R2"),
                                                   lefschetz::fixed_curve_budget(-2, 1));
  expect_eq(eq.to_string(), std::string("2x^2 = (m-4)^2 - 3"), "reduced equation");
  expect(!lefschetz::modular_nonsolvability(eq, 9).solvable, "unsolvable mod 9");
  expect(lefschetz::brute_force_solutions(eq, 1000).empty(), "no solution with |x|,|m| <= 1000");

  const lefschetz::ClassAnsatz full{
      {"x", "y", "b"},
      {parse_combination("E1'+R3"), parse_combination("E3'+R2"), parse_combination("C1'")},
      {"E1'", "E2'", "E3'"}};
  const auto i = lefschetz::fixed_curve_class_solve(ns, full, {0, 0, 0}, 0);
  expect(i.status == lefschetz::SolveStatus::solved && i.solutions == std::vector<RationalVector>{{0, 0, 0}},
         "trace 0, sign -1: unique solution x=y=b=0");
  expect_eq(lefschetz::fixed_curve_class_solve(ns, full, {2, 2, 2}, 0).status,
            lefschetz::SolveStatus::no_rational_solution, "trace 0, sign -1: second branch empty");
  for (const RationalVector& t : {RationalVector{0, 0, 0}, RationalVector{2, 2, 2}}) {
    expect_eq(lefschetz::fixed_curve_class_solve(ns, full, t, 4).status, lefschetz::SolveStatus::no_rational_solution,
              "trace 0, sign +1: no rational solution for targets " + to_string(t));
  }
}

void section_six() {
  const auto s = replay::builtin_scenario("cartwright-steger");
  expect_eq(replay::section6_contradiction(s), Rational(4, 3), "pairing = 4/3");
  const auto report = replay::run_scenario(s);
  const auto* a = report.find("contradiction.pairing");
  expect(a != nullptr && a->status == replay::Status::pass, "report entry passes");
  expect(a->computed.find("4/3 (non-integral)") == 0, "report flags non-integrality");
  expect(report.pass(), "full replay passes");
}

void invariants_of_quotients() {
  const auto q = y_quotient();
  const auto z = quotient::free_involution_quotient(*q.lattice, fixtures::alpha(), "Z");
  const auto z9 = sublattice(*z, {"r1", "r2", "c1", "r11", "r12", "r21", "r22", "r31", "r32"}, "Z9");
  expect_eq(determinant(z9->gram()), Rational(81), "det = 81 = 3^4");
  const auto y = quotient::noether_invariants(2, 2, 0, 1);
  expect(y.euler_number == 22 && y.b2 == 20, "Y: (K^2, e, b2) = (2, 22, 20)");
  const auto zz = quotient::noether_invariants(1, 1, 0, 0);
  expect(zz.euler_number == 11 && zz.b2 == 9, "Z: (K^2, e, b2) = (1, 11, 9)");
  const std::vector<long> want{0, 0, 0, 1, 1, 1, 1};
  const auto records = fixtures::x_records();
  for (std::size_t i = 0; i < records.size(); ++i) {
    long fixed = 0;
    for (long m : records[i].mults) {
      fixed += m;
    }
    expect_eq(quotient::quotient_genus(records[i].genus, 3, fixed), want[i], "genus of image of " + records[i].label);
  }
}

Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) {
    return m(0, 0);
  }
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t i = 1; i < n; ++i) {
      rows.push_back(i);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c) {
        cols.push_back(k);
      }
    }
    const Rational t = m(0, c) * cofactor_det(m.select(rows, cols));
    total += c % 2 ? -t : t;
  }
  return total;
}

std::vector<std::string> failing_ids(const replay::json& scenario) {
  std::vector<std::string> out;
  for (const auto& a : replay::run_scenario(scenario).assertions) {
    if (a.status == replay::Status::fail) {
      out.push_back(a.id);
    }
  }
  return out;
}

replay::json& assertion(replay::json& s, const std::string& id) {
  for (auto& a : s["assertions"]) {
    if (a["id"] == id) {
      return a;
    }
  }
  throw Failure{"no assertion " + id};
}

void property_suites() {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-30, 30);
  std::uniform_int_distribution<int> den(1, 9);
  const auto x = fixtures::x_lattice();
  const auto ns = fixtures::ns_x();
  auto random_class = [&](const LatticePtr& l) {
    RationalVector v;
    for (std::size_t i = 0; i < l->rank(); ++i) {
      v.push_back(Rational(num(rng), den(rng)));
    }
    return DivisorClass(l, v);
  };
  for (int t = 0; t < 200; ++t) {
    const auto a = random_class(x);
    const auto b = random_class(x);
    const auto c = random_class(x);
    expect(pair(a + b, c) == pair(a, c) + pair(b, c) && pair(a, b) == pair(b, a), "bilinearity");
    const auto d = random_class(ns);
    expect(coords_from_pairings(ns, pairings_with_basis(d)) == d, "round trip");
  }

  std::vector<std::size_t> count(10001);
  for (long u = 0; u * u <= 10000; ++u) {
    for (long s = 0; u * u + s * s <= 10000; ++s) {
      ++count[u * u + s * s];
    }
  }
  for (long n = 0; n <= 10000; ++n) {
    expect_eq(two_square_representations(n).size(), count[n], "two squares at " + std::to_string(n));
  }

  std::uniform_int_distribution<int> entry(-20, 20);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int t = 0; t < 100; ++t) {
      RationalMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) = entry(rng);
        }
      }
      expect_eq(determinant(m), cofactor_det(m), "determinant vs cofactor");
    }
  }

  const auto base = replay::builtin_scenario("cartwright-steger");
  expect(failing_ids(base).empty(), "unperturbed scenario passes");
  auto s = base;
  for (auto& l : s["lattices"]) {
    if (l["name"] == "X") {
      l["gram"][0][1] = 12;
      l["gram"][1][0] = 12;
    }
  }
  auto f = failing_ids(s);
  expect(!f.empty() && f.front() == "x.table.from-multiplicities", "E1.E2 = 12 fails the multiplicity check first");
  s = base;
  auto& t3 = assertion(s, "y.table")["expected"];
  t3[8][9] = 21;
  t3[9][8] = 21;
  expect_eq(failing_ids(s), std::vector<std::string>{"y.table"}, "perturbed resolved table");
  s = base;
  auto& t4 = assertion(s, "z.table")["expected"];
  t4[0][2] = 4;
  t4[2][0] = 4;
  expect_eq(failing_ids(s), std::vector<std::string>{"z.table"}, "perturbed involution quotient table");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"intersection table from multiplicities and consistency identities", table_from_multiplicities},
      {"NS(X) Gram determinant 324", ns_determinant},
      {"K.D = 2, D^2 = 0 search with box oracle", step_one_search},
      {"pairing profile and 8/9 obstruction", step_two_profile},
      {"resolved quotient (100 entries) and involution quotient (49 entries)", quotient_tables},
      {"canonical class, adjunction on 22 curves, fibre pullback", canonical_and_fibre},
      {"involution traces and fixed-locus Euler numbers", branch_traces},
      {"elimination of the four fixed-locus branches", case_eliminations},
      {"pullback pairing 4/3 flagged non-integral", section_six},
      {"determinant 81, Noether invariants, Riemann-Hurwitz genera", invariants_of_quotients},
      {"property suites and negative controls", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2zu  %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                detail.empty() ? "" : "  -- ", detail.c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
