#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "surfcalc/exact/number_theory.hpp"
#include "surfcalc/lefschetz/action.hpp"
#include "surfcalc/lefschetz/elimination.hpp"
#include "surfcalc/quotient/hj_chain.hpp"

using namespace surfcalc;
using namespace surfcalc::lefschetz;

namespace {

struct Setup {
  quotient::QuotientLattice q = quotient::build_quotient_lattice(fixtures::y_setup());
  NamedClasses ns = fixtures::ns_y(q.lattice);
};

const Setup& setup() {
  static const Setup s;
  return s;
}

ClassAnsatz full_ansatz() {
  return {{"x", "y", "b"},
          {parse_combination("E1'+R3"), parse_combination("E3'+R2"), parse_combination("C1'")},
          {"E1'", "E2'", "E3'"}};
}

ClassAnsatz reduced_ansatz() {
  return {{"x", "y"}, {parse_combination("E1'+R3"), parse_combination("E3'+R2")}, {}};
}

RationalMatrix block_diagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    n += b.rows();
  }
  RationalMatrix m(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        m(at + i, at + j) = b(i, j);
      }
    }
    at += b.rows();
  }
  return m;
}

std::vector<DeterminantBlock> case1_blocks() {
  return {{"(-2)-curve", RationalMatrix::from_rows({{-2}}), {0, 2}},
          {"A2", quotient::hj_chain(3, 2).gram(), {3, 0}},
          {"outer", RationalMatrix::from_rows({{-1, 3}, {3, -1}}), {1, 0}}};
}

}  // namespace

TEST_CASE("the involution acts on NS as an isometric involution") {
  const auto& s = setup();
  const auto a = build_action(s.ns, fixtures::alpha());
  CHECK(a.matrix * a.matrix == RationalMatrix::identity(18));
  CHECK(a.matrix.transpose() * s.ns.lattice()->gram() * a.matrix == s.ns.lattice()->gram());
  CHECK(a.trace() == 0);
  // The image of E1' is R3 and of R1 is the embedded class of E2'.
  CHECK(a.apply(s.ns.at("E1'")) == s.ns.at("R3"));
  CHECK(a.apply(s.ns.at("R1")) == s.ns.at("E2'"));
}

TEST_CASE("the two images of C1' give traces 0 and -2") {
  const auto& s = setup();
  const auto moved = s.ns.evaluate("-R3-E1'+3E3'+3R2-C1'");
  CHECK(pair(moved, moved) == -2);
  const auto a = build_action(s.ns, fixtures::alpha(), {{"C1'", moved}});
  CHECK(a.trace() == -2);
  CHECK(a.matrix * a.matrix == RationalMatrix::identity(18));
  CHECK_THROWS_AS(build_action(s.ns, fixtures::alpha(), {{"C1'", s.ns.at("E1'")}}), std::domain_error);
}

TEST_CASE("the trace does not depend on how exchanged chains are matched") {
  const auto& s = setup();
  auto spec = fixtures::alpha();
  for (auto& p : spec.chain_orbit_pairs) {
    std::reverse(p.second.begin(), p.second.end());
  }
  const auto moved = s.ns.evaluate("-R3-E1'+3E3'+3R2-C1'");
  CHECK(build_action(s.ns, spec).trace() == 0);
  CHECK(build_action(s.ns, spec, {{"C1'", moved}}).trace() == -2);

  auto regrouped = fixtures::alpha();
  regrouped.chain_orbit_pairs = {{{"R11", "R12"}, {"R41", "R42"}, {"s1", "s2"}},
                                 {{"R31", "R32"}, {"R61", "R62"}, {"s3", "s4"}},
                                 {{"R51", "R52"}, {"R21", "R22"}, {"s5", "s6"}}};
  CHECK(build_action(s.ns, regrouped).trace() == 0);
  CHECK(build_action(s.ns, regrouped, {{"C1'", moved}}).trace() == -2);
}

TEST_CASE("candidate images of C1'") {
  const auto& s = setup();
  CandidateProblem p{"C1'",
                     {"E1'", "E3'", "R1", "R2", "R3", "C1'"},
                     {"E1'", "E2'", "E3'", "R1", "R2", "R3"},
                     {"R11", "R12", "R21", "R22", "R31", "R32", "R41", "R42", "R51", "R52", "R61", "R62"},
                     "E1'"};
  const auto r = alpha_candidates(s.ns, fixtures::alpha(), p);
  CHECK(r.lead == -12);
  CHECK(r.linear == -12);
  CHECK(r.constant == -2);
  // Sigma^2 = -2 - f(x) = 12x^2 + 12x vanishes at x = 0 and x = -1 only.
  CHECK(r.parameters == std::vector<long>{-1, 0});
  REQUIRE(r.candidates.size() == 2);
  const auto c1 = s.ns.at("C1'");
  const auto moved = s.ns.evaluate("-R3-E1'+3E3'+3R2-C1'");
  CHECK(std::find(r.candidates.begin(), r.candidates.end(), c1) != r.candidates.end());
  CHECK(std::find(r.candidates.begin(), r.candidates.end(), moved) != r.candidates.end());
  for (const auto& c : r.candidates) {
    CHECK(pair(c, c) == -2);
    CHECK(pair(c, s.ns.at("E1'")) == pair(c1, s.ns.at("R3")));
  }

  p.parameter = "R11";
  CHECK_THROWS(alpha_candidates(s.ns, fixtures::alpha(), p));
}

TEST_CASE("negative definiteness by leading minors") {
  CHECK(negative_definite(quotient::hj_chain(3, 2).gram()));
  CHECK(negative_definite(RationalMatrix::from_rows({{-3}})));
  CHECK_FALSE(negative_definite(RationalMatrix::from_rows({{-1, 3}, {3, -1}})));
  CHECK_FALSE(negative_definite(RationalMatrix::from_rows({{0}})));
}

TEST_CASE("topological Lefschetz values of the four branches") {
  CHECK(topological_constraint(-2, -1) == -2);
  CHECK(topological_constraint(-2, 1) == 2);
  CHECK(topological_constraint(0, -1) == 0);
  CHECK(topological_constraint(0, 1) == 4);
  CHECK(topological_constraint(0, 1, 2) == 2);
}

TEST_CASE("holomorphic Lefschetz examples") {
  FixedLocusHypothesis empty{0, {}, -1};
  CHECK(empty.euler_number() == 0);
  CHECK(holomorphic_constraint(empty) == 0);
  FixedLocusHypothesis points{2, {}, 1};
  CHECK(points.euler_number() == 4);
  CHECK(holomorphic_constraint(points) == 1);
  FixedLocusHypothesis elliptic{0, {{1, 8}}, 1};
  CHECK(elliptic.euler_number() == 0);
  CHECK(holomorphic_constraint(elliptic) == 0);
  CHECK_THROWS_AS((FixedLocusHypothesis{-1, {}, 1}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FixedLocusHypothesis{0, {}, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FixedLocusHypothesis{0, {{-1, 0}}, 1}.validate()), std::invalid_argument);
}

TEST_CASE("budgets agree with random hypotheses") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_int_distribution<int> sq(-6, 6);
  for (int trial = 0; trial < 500; ++trial) {
    FixedLocusHypothesis h;
    h.m = small(rng);
    h.h20_sign = trial % 2 ? 1 : -1;
    const int curves = small(rng);
    Rational a2;
    Rational ka;
    for (int i = 0; i < curves; ++i) {
      const long g = small(rng);
      const Rational s = sq(rng);
      h.curves.push_back({g, s});
      a2 += s;
      ka += Rational(2 * g - 2) - s;
    }
    const long e = h.euler_number();
    const auto b = fixed_curve_budget(e - 2 - 2 * h.h20_sign, h.h20_sign);
    CHECK(b.e_fixed == e);
    CHECK(holomorphic_constraint(h).is_zero() == (a2 == b.sum_a2));
    CHECK(ka == Rational(2 * h.m - e) - a2);
    if (a2 == b.sum_a2) {
      CHECK(ka == Rational(2 * h.m) + b.ka_offset);
    }
  }
  CHECK(fixed_curve_budget(-2, 1).to_string() == "e=2, sum A^2 = 6, sum K.A = 2m-8");
}

TEST_CASE("class solve: empty locus branch and the eliminated branch") {
  const auto& s = setup();
  const auto q = ansatz_quadratic_form(s.ns, full_ansatz());
  CHECK(q.rows() == 3);

  auto r = fixed_curve_class_solve(s.ns, full_ansatz(), {0, 0, 0}, 0);
  REQUIRE(r.status == SolveStatus::solved);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == RationalVector{0, 0, 0});
  // Along the kernel (x, -3x, 2x) the square is -12x^2.
  CHECK(r.lead / (r.direction[0] * r.direction[0]) == -12);
  CHECK(r.direction[1] == -3 * r.direction[0]);
  CHECK(r.direction[2] == 2 * r.direction[0]);

  r = fixed_curve_class_solve(s.ns, full_ansatz(), {2, 2, 2}, 0);
  CHECK(r.status == SolveStatus::no_rational_solution);
  CHECK(r.discriminant == Rational(96));

  for (const RationalVector& t : {RationalVector{0, 0, 0}, RationalVector{2, 2, 2}}) {
    r = fixed_curve_class_solve(s.ns, full_ansatz(), t, 4);
    CHECK(r.status == SolveStatus::no_rational_solution);
    REQUIRE(r.discriminant.has_value());
    CHECK_FALSE(rational_is_square(*r.discriminant).has_value());
  }

  r = fixed_curve_class_solve(s.ns, full_ansatz(), {0, 0, 1}, 0);
  CHECK(r.status == SolveStatus::inconsistent);
  CHECK(to_string(SolveStatus::solved) == "solved");
}

TEST_CASE("reduction to 2x^2 = (m-4)^2 - 3") {
  const auto& s = setup();
  const auto eq = reduce_to_diophantine(s.ns, reduced_ansatz(), parse_combination("E3'+R2"),
                                        fixed_curve_budget(-2, 1));
  CHECK(eq == DiophantineEquation{2, 1, 4, 3});
  CHECK(eq.to_string() == "2x^2 = (m-4)^2 - 3");
  CHECK(eq.forces_integral_x());
  CHECK_FALSE((DiophantineEquation{4, 1, 0, 1}.forces_integral_x()));
  CHECK_THROWS_AS(reduce_to_diophantine(s.ns, full_ansatz(), parse_combination("E3'+R2"), fixed_curve_budget(-2, 1)),
                  std::invalid_argument);
}

TEST_CASE("mod 9 rules the equation out where mod 2 cannot") {
  const DiophantineEquation eq{2, 1, 4, 3};
  // Residue oracle: 2x^2 + 3 and s^2 mod 9.
  std::set<long> lhs;
  std::set<long> rhs;
  for (long v = 0; v < 9; ++v) {
    lhs.insert((2 * v * v + 3) % 9);
    rhs.insert(v * v % 9);
  }
  bool meet = false;
  for (long v : lhs) {
    meet = meet || rhs.count(v);
  }
  CHECK_FALSE(meet);

  const auto v9 = modular_nonsolvability(eq, 9);
  CHECK_FALSE(v9.solvable);
  CHECK_FALSE(v9.witness.has_value());
  CHECK(std::set<long>(v9.lhs_residues.begin(), v9.lhs_residues.end()) == lhs);
  const auto v2 = modular_nonsolvability(eq, 2);
  CHECK(v2.solvable);
  REQUIRE(v2.witness.has_value());
  CHECK(eq.holds(v2.witness->first, v2.witness->second) == false);
  const auto v3 = modular_nonsolvability(eq, 3);
  CHECK(v3.solvable);
  CHECK_THROWS_AS(modular_nonsolvability(eq, 1), std::invalid_argument);
}

TEST_CASE("no solutions with |x|, |m| <= 1000") {
  const DiophantineEquation eq{2, 1, 4, 3};
  CHECK(brute_force_solutions(eq, 1000).empty());
  // A solvable control: x^2 = m^2 - 1 at (0, +-1).
  const DiophantineEquation control{1, 1, 0, 1};
  const auto sols = brute_force_solutions(control, 50);
  CHECK(sols == std::vector<std::pair<long, long>>{{0, -1}, {0, 1}});
  CHECK(modular_nonsolvability(control, 9).solvable);
}

TEST_CASE("configuration determinant 2^(2m+3) 3^3 is never a square") {
  const auto obs = nonsquare_determinant_obstruction(case1_blocks());
  CHECK(obs.never_square);
  CHECK(obs.expression() == "2^(2m+3)*3^3");
  REQUIRE(obs.witness_prime.has_value());
  CHECK(*obs.witness_prime == 2);
  CHECK(obs.evaluate(2) == 3456);
  CHECK_FALSE(is_perfect_square(obs.evaluate(2)).has_value());
  CHECK(obs.certificate() == "exponent of 2 is 2m+3, odd for every m");

  // Oracle: assemble the block matrix for small m.
  for (long m = 0; m <= 3; ++m) {
    std::vector<RationalMatrix> blocks;
    for (const auto& b : case1_blocks()) {
      for (long k = 0; k < b.count.at(m); ++k) {
        blocks.push_back(b.gram);
      }
    }
    CHECK(determinant(block_diagonal(blocks)).abs() == Rational(obs.evaluate(m)));
    CHECK_FALSE(is_perfect_square(obs.evaluate(m)).has_value());
  }

  const auto fine = nonsquare_determinant_obstruction({{"pair", RationalMatrix::from_rows({{-2}}), {2, 0}}});
  CHECK_FALSE(fine.never_square);
  CHECK_THROWS_AS(nonsquare_determinant_obstruction({{"zero", RationalMatrix::from_rows({{0}}), {1, 0}}}),
                  std::domain_error);
}

TEST_CASE("factorisation") {
  CHECK(factorize(3456) == std::vector<std::pair<Integer, long>>{{2, 7}, {3, 3}});
  CHECK(factorize(1).empty());
  CHECK(factorize(97) == std::vector<std::pair<Integer, long>>{{97, 1}});
  CHECK_THROWS(factorize(0));
}

TEST_CASE("case analysis of the four branches") {
  const auto& s = setup();
  CaseContext ctx;
  ctx.classes = &s.ns;
  ctx.ansatz = full_ansatz();
  ctx.target_branches = {{0, 0, 0}, {2, 2, 2}};
  ctx.reduced_ansatz = reduced_ansatz();
  ctx.canonical = parse_combination("E3'+R2");
  ctx.determinant_blocks = case1_blocks();

  auto r = analyse_case({"1", -2, -1, Strategy::determinant}, ctx);
  CHECK(r.eliminated);
  r = analyse_case({"2", -2, 1, Strategy::diophantine}, ctx);
  CHECK(r.eliminated);
  CHECK(std::find(r.constraints.begin(), r.constraints.end(), "2x^2 = (m-4)^2 - 3") != r.constraints.end());
  r = analyse_case({"I", 0, -1, Strategy::class_solve}, ctx);
  CHECK_FALSE(r.eliminated);
  CHECK(r.fixed_point_free);
  r = analyse_case({"II", 0, 1, Strategy::class_solve}, ctx);
  CHECK(r.eliminated);
  CHECK_FALSE(r.fixed_point_free);

  // Mod 2 alone does not eliminate case 2.
  ctx.modulus = 2;
  CHECK_FALSE(analyse_case({"2", -2, 1, Strategy::diophantine}, ctx).eliminated);
  CHECK_THROWS_AS(analyse_case({"1", -2, 1, Strategy::determinant}, ctx), std::invalid_argument);
}
