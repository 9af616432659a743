#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "surfcalc/quotient/hj_chain.hpp"

using namespace surfcalc;
using namespace surfcalc::quotient;

TEST_CASE("Hirzebruch-Jung chains of 1/3(1,1) and 1/3(1,2)") {
  CHECK(hj_chain(3, 1).self_intersections == std::vector<long>{-3});
  CHECK(hj_chain(3, 2).self_intersections == std::vector<long>{-2, -2});
  CHECK(hj_chain(3, 2).gram() == RationalMatrix::from_rows({{-2, 1}, {1, -2}}));
  CHECK(hj_chain(7, 3).self_intersections == std::vector<long>{-3, -2, -2});
  CHECK(hj_chain(5, 1).self_intersections == std::vector<long>{-5});
  CHECK(hj_chain(5, 4).self_intersections == std::vector<long>{-2, -2, -2, -2});
}

TEST_CASE("chains evaluate back to n/a and have determinant (-1)^r n") {
  for (long n = 2; n <= 40; ++n) {
    for (long a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) {
        CHECK_THROWS_AS(hj_chain(n, a), std::domain_error);
        continue;
      }
      const auto c = hj_chain(n, a);
      CHECK(continued_fraction_value(c.self_intersections) == Rational(n, a));
      for (long e : c.self_intersections) {
        CHECK(e <= -2);
      }
      const Rational det = determinant(c.gram());
      CHECK(det == Rational(c.self_intersections.size() % 2 ? -n : n));
    }
  }
  CHECK_THROWS_AS(hj_chain(1, 1), std::domain_error);
}

TEST_CASE("the resolved quotient reproduces all 100 entries of its table") {
  const auto q = build_quotient_lattice(fixtures::y_setup());
  CHECK(q.lattice->rank() == 22);
  const auto t = fixtures::table3();
  for (std::size_t i = 0; i < fixtures::kYLabels.size(); ++i) {
    for (std::size_t j = 0; j < fixtures::kYLabels.size(); ++j) {
      CAPTURE(fixtures::kYLabels[i]);
      CAPTURE(fixtures::kYLabels[j]);
      CHECK(q.lattice->pairing(fixtures::kYLabels[i], fixtures::kYLabels[j]) == t(i, j));
    }
  }
  // Spot checks against the formula (A.B - sum m m)/3 by hand.
  CHECK(q.lattice->pairing("C3'", "C4'") == Rational(89 - 29, 3));
  CHECK(q.lattice->pairing("E1'", "E1'") == Rational(5 - 14, 3));
  CHECK(q.transform_of("E2") == "E2'");
  CHECK(q.chains.size() == 9);
  CHECK(q.exceptional_labels().size() == 15);
}

TEST_CASE("the (-2)-chains are disjoint from the ten listed curves") {
  const auto q = build_quotient_lattice(fixtures::y_setup());
  for (const auto& c : q.chains) {
    if (c.labels.size() != 2) {
      continue;
    }
    CHECK(q.lattice->pairing(c.labels[0], c.labels[1]) == 1);
    for (const auto& l : fixtures::kYLabels) {
      CHECK(q.lattice->pairing(c.labels[0], l) == 0);
      CHECK(q.lattice->pairing(c.labels[1], l) == 0);
    }
  }
}

TEST_CASE("broken divisibility names the offending pair") {
  auto g = fixtures::x_gram();
  g(0, 1) = 14;
  g(1, 0) = 14;
  const auto setup = fixtures::y_setup(make_lattice("X", fixtures::kXLabels, g));
  try {
    build_quotient_lattice(setup);
    FAIL("expected a divisibility error");
  } catch (const DivisibilityError& e) {
    CHECK(e.first() == "E1");
    CHECK(e.second() == "E2");
  }
}

TEST_CASE("quotient setups are validated") {
  auto s = fixtures::y_setup();
  s.points[0].type = {5, 1};
  CHECK_THROWS(build_quotient_lattice(s));
  s = fixtures::y_setup();
  s.curves[0].sigma_invariant = false;
  CHECK_THROWS(build_quotient_lattice(s));
  s = fixtures::y_setup();
  s.curves[0].mults = {3, 1, 2, 0, 0, 0, 1, 0, 0};  // through a 1/3(1,2) point
  CHECK_THROWS(build_quotient_lattice(s));
}

TEST_CASE("canonical class and pullback of the Albanese fibre") {
  const auto q = build_quotient_lattice(fixtures::y_setup());
  NamedClasses c(q.lattice);
  const auto k = canonical_on_resolution(q, parse_combination("E3"));
  CHECK(k == c.evaluate("E3'+R2"));
  CHECK(pair(k, k) == 2);
  // Adjunction on every one of the 22 curves.
  for (const auto& label : q.lattice->basis()) {
    const auto d = c.at(label);
    const Rational pa = 1 + (pair(d, d) + pair(k, d)) / 2;
    CAPTURE(label);
    if (label == "C1'" || label == "C2'") {
      CHECK(pa == 1);
    } else if (label == "C3'" || label == "C4'") {
      CHECK(pa == 11);
    } else {
      CHECK(pa == 0);
    }
  }

  // Exceptional part of a pullback is m_k/3 on each (-3)-curve.
  const auto f = pullback(q, parse_combination("-3E1+15E2"));
  CHECK(f == c.evaluate("-3E1'+15E2'+7R1+4R2+13R3"));
  CHECK(pair(f, f) == 0);
  CHECK(pair(k, f) == 36);
  for (const auto* r : {"R1", "R2", "R3"}) {
    CHECK(pair(f, c.at(r)) == 0);
  }
  const auto e3 = pullback(q, parse_combination("E3"));
  CHECK(e3 == c.evaluate("E3'+1/3R1+4/3R2+1/3R3"));
}

TEST_CASE("the three thirds of the fibre pair integrally") {
  const auto q = build_quotient_lattice(fixtures::y_setup());
  NamedClasses c(q.lattice);
  const auto f = c.evaluate("-3E1'+15E2'+7R1+4R2+13R3");
  for (const char* rest : {"R1+R2+R3", "2R12+R11+2R22+R21+2R32+R31", "2R42+R41+2R52+R51+2R62+R61"}) {
    const auto third = Rational(1, 3) * (f - c.evaluate(rest));
    for (const auto& p : pairings_with_basis(third)) {
      CHECK(p.is_integer());
    }
  }
}

TEST_CASE("equivalences and rank on the resolution") {
  const auto q = build_quotient_lattice(fixtures::y_setup());
  NamedClasses c(q.lattice);
  const auto checks = verify_equivalences(
      c, {{"E1'+E2'+R1+R3", "2E3'+2R2"}, {"C1'+C3'", "C2'+C4'"}, {"E2'+E3'+R1+R2", "C1'+C2'"}, {"E1'", "E2'"}});
  CHECK(checks[0].holds);
  CHECK(checks[1].holds);
  CHECK(checks[2].holds);
  CHECK_FALSE(checks[3].holds);
  CHECK(rank(q.lattice->gram()) == 18);
  CHECK(rank(sublattice(*q.lattice, fixtures::kNSYLabels, "NS(Y)")->gram()) == 18);
}

TEST_CASE("Riemann-Hurwitz genera of the image curves") {
  const std::vector<long> expected{0, 0, 0, 1, 1, 1, 1};
  const auto r = fixtures::x_records();
  for (std::size_t i = 0; i < r.size(); ++i) {
    long fixed = 0;
    for (long m : r[i].mults) {
      fixed += m;
    }
    CHECK(quotient_genus(r[i].genus, 3, fixed) == expected[i]);
  }
  CHECK_THROWS_AS(quotient_genus(4, 3, 5), std::domain_error);
}

TEST_CASE("Noether invariants") {
  CHECK(noether_invariants(9, 1, 1, 1) == NoetherInvariants{3, 5, 3});
  CHECK(noether_invariants(2, 2, 0, 1) == NoetherInvariants{22, 20, 18});
  CHECK(noether_invariants(1, 1, 0, 0) == NoetherInvariants{11, 9, 9});
  CHECK_THROWS_AS(noether_invariants(1, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("the involution is an isometry and its quotient reproduces all 49 entries") {
  const auto q = build_quotient_lattice(fixtures::y_setup());
  const auto spec = fixtures::alpha();
  CHECK_NOTHROW(validate_involution(spec, *q.lattice));
  const auto z = free_involution_quotient(*q.lattice, spec, "Z");
  const auto t = fixtures::table4();
  for (std::size_t i = 0; i < fixtures::kZLabels.size(); ++i) {
    for (std::size_t j = 0; j < fixtures::kZLabels.size(); ++j) {
      CHECK(z->pairing(fixtures::kZLabels[i], fixtures::kZLabels[j]) == t(i, j));
    }
  }
  const auto z9 = sublattice(*z, {"r1", "r2", "c1", "r11", "r12", "r21", "r22", "r31", "r32"}, "Z9");
  CHECK(determinant(z9->gram()) == 81);

  NamedClasses c(q.lattice);
  const auto k = c.evaluate("E3'+R2");
  CHECK(apply_involution(spec, k) == k);
  const auto kz = descend_class(spec, k, z);
  CHECK(kz == DivisorClass::basis_vector(z, "r2"));
  CHECK(pair(kz, kz) == 1);
  CHECK_THROWS_AS(descend_class(spec, c.at("E1'"), z), std::domain_error);
  CHECK(apply_involution(spec, apply_involution(spec, c.at("R11"))) == c.at("R11"));
}

TEST_CASE("involution validation") {
  const auto q = build_quotient_lattice(fixtures::y_setup());
  auto spec = fixtures::alpha();
  spec.fixed.pop_back();
  CHECK_THROWS_AS(validate_involution(spec, *q.lattice), std::invalid_argument);
  spec = fixtures::alpha();
  spec.swaps[0] = {"E1'", "R1", "r3"};
  spec.swaps[1] = {"E2'", "R3", "r1"};
  CHECK_THROWS_AS(validate_involution(spec, *q.lattice), std::domain_error);
  spec = fixtures::alpha();
  spec.chain_orbit_pairs[0].second.pop_back();
  CHECK_THROWS_AS(validate_involution(spec, *q.lattice), std::invalid_argument);
}
