#pragma once

// Hand-entered tables shared by the module tests. They are typed in
// independently of scenarios/cartwright-steger.json so the two can catch
// each other's typos.

#include <string>
#include <vector>

#include "surfcalc/curves/curve.hpp"
#include "surfcalc/lattice/combination.hpp"
#include "surfcalc/quotient/involution.hpp"
#include "surfcalc/quotient/resolution.hpp"

namespace fixtures {

using namespace surfcalc;

inline const std::vector<std::string> kXLabels{"E1", "E2", "E3", "C1", "C2", "C3", "C4"};

inline RationalMatrix x_gram() {
  return RationalMatrix::from_rows({{5, 13, 9, 11, 11, 25, 25},
                                    {13, 5, 9, 7, 7, 29, 29},
                                    {9, 9, 9, 9, 9, 27, 27},
                                    {11, 7, 9, -1, 17, 37, 19},
                                    {11, 7, 9, 17, -1, 19, 37},
                                    {25, 29, 27, 37, 19, 71, 89},
                                    {25, 29, 27, 19, 37, 89, 71}});
}

inline LatticePtr x_lattice() { return make_lattice("X", kXLabels, x_gram()); }

inline std::vector<curves::CurveRecord> x_records() {
  return {{"E1", 4, {3, 1, 2}}, {"E2", 4, {2, 1, 3}},  {"E3", 4, {1, 4, 1}},  {"C1", 4, {0, 1, 2}},
          {"C2", 4, {0, 1, 2}}, {"C3", 10, {4, 3, 2}}, {"C4", 10, {4, 3, 2}}};
}

inline LatticePtr ns_x() {
  return make_lattice("NS(X)", {"E1", "E3", "C1"},
                      RationalMatrix::from_rows({{5, 9, 11}, {9, 9, 9}, {11, 9, -1}}));
}

inline quotient::CyclicQuotientSetup y_setup(LatticePtr source = x_lattice()) {
  quotient::CyclicQuotientSetup s;
  s.order = 3;
  s.name = "Y";
  s.source = std::move(source);
  s.curves = x_records();
  s.points = {{"O1", {3, 1}, "R1"}, {"O2", {3, 1}, "R2"}, {"O3", {3, 1}, "R3"},
              {"Q1", {3, 2}, "R1"}, {"Q2", {3, 2}, "R2"}, {"Q3", {3, 2}, "R3"},
              {"Q4", {3, 2}, "R4"}, {"Q5", {3, 2}, "R5"}, {"Q6", {3, 2}, "R6"}};
  return s;
}

inline const std::vector<std::string> kYLabels{"E1'", "E2'", "E3'", "R1",  "R2",
                                               "R3",  "C1'", "C2'", "C3'", "C4'"};

inline RationalMatrix table3() {
  return RationalMatrix::from_rows({{-3, 0, 0, 3, 1, 2, 2, 2, 2, 2},
                                    {0, -3, 0, 2, 1, 3, 0, 0, 4, 4},
                                    {0, 0, -3, 1, 4, 1, 1, 1, 3, 3},
                                    {3, 2, 1, -3, 0, 0, 0, 0, 4, 4},
                                    {1, 1, 4, 0, -3, 0, 1, 1, 3, 3},
                                    {2, 3, 1, 0, 0, -3, 2, 2, 2, 2},
                                    {2, 0, 1, 0, 1, 2, -2, 4, 10, 4},
                                    {2, 0, 1, 0, 1, 2, 4, -2, 4, 10},
                                    {2, 4, 3, 4, 3, 2, 10, 4, 14, 20},
                                    {2, 4, 3, 4, 3, 2, 4, 10, 20, 14}});
}

inline const std::vector<std::string> kZLabels{"r1", "r2", "r3", "c1", "c2", "c3", "c4"};

inline RationalMatrix table4() {
  return RationalMatrix::from_rows({{-1, 1, 3, 0, 0, 4, 4},
                                    {1, 1, 1, 1, 1, 3, 3},
                                    {3, 1, -1, 2, 2, 2, 2},
                                    {0, 1, 2, -1, 2, 5, 2},
                                    {0, 1, 2, 2, -1, 2, 5},
                                    {4, 3, 2, 5, 2, 7, 10},
                                    {4, 3, 2, 2, 5, 10, 7}});
}

inline quotient::InvolutionSpec alpha() {
  quotient::InvolutionSpec s;
  s.swaps = {{"E1'", "R3", "r3"}, {"E2'", "R1", "r1"}, {"E3'", "R2", "r2"}};
  s.fixed = {{"C1'", "c1"}, {"C2'", "c2"}, {"C3'", "c3"}, {"C4'", "c4"}};
  s.chain_orbit_pairs = {{{"R11", "R12"}, {"R21", "R22"}, {"r11", "r12"}},
                         {{"R31", "R32"}, {"R41", "R42"}, {"r21", "r22"}},
                         {{"R51", "R52"}, {"R61", "R62"}, {"r31", "r32"}}};
  return s;
}

inline const std::vector<std::string> kNSYLabels{"E1'", "E3'", "R1",  "R2",  "R3",  "C1'",
                                                 "R11", "R12", "R21", "R22", "R31", "R32",
                                                 "R41", "R42", "R51", "R52", "R61", "R62"};

/// NS(Y) on 18 independent curves, with the other four embedded by pairings.
inline NamedClasses ns_y(const LatticePtr& y) {
  NamedClasses c(sublattice(*y, kNSYLabels, "NS(Y)"));
  for (const auto& label : y->basis()) {
    if (c.contains(label)) {
      continue;
    }
    RationalVector p;
    for (const auto& b : kNSYLabels) {
      p.push_back(y->pairing(label, b));
    }
    c.embed_by_pairings(label, p);
  }
  return c;
}

}  // namespace fixtures
