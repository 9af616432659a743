#pragma once

#include <vector>

#include "surfcalc/lattice/lattice.hpp"

namespace surfcalc::search {

/// Find classes D with prescribed K.D and D^2 on a rank-3 lattice whose
/// basis is (A, K, C): the canonical class is numerically the middle basis
/// vector. The unknowns are a = D.A, b = D.K (pinned to `target_kd`) and
/// c = D.C, all integers.
struct SearchProblem {
  LatticePtr lattice;
  Integer target_kd;
  Integer target_d2;
};

struct SearchSolution {
  Integer a;
  Integer b;
  Integer c;
  /// Square root of the quarter-discriminant of the quadratic in c.
  Integer s;
  DivisorClass divisor;
};

/// Integer quadratic N*(p^T G^{-1} p - D^2) = 0 in the unknown c, written as
/// lead*c^2 + 2*half_linear*c + constant = 0.
struct QuadraticInC {
  Integer lead;
  Integer half_linear;
  Integer constant;

  /// half_linear^2 - lead*constant.
  Integer quarter_discriminant() const;
};

/// The quadratic in c for fixed (a, b, D^2), derived from the inverse Gram
/// matrix scaled by the least common denominator of its entries.
QuadraticInC quadratic_in_c(const IntersectionLattice& lattice, const Integer& a,
                            const Integer& b, const Integer& d2);

/// All integral (a, b, c) solutions, sorted by (a, c). Empty when the
/// discriminant is negative for every a. Throws std::domain_error if the
/// lattice is not rank 3, is degenerate, or leaves a unbounded.
std::vector<SearchSolution> enumerate_classes(const SearchProblem& problem);

struct IntegralityVerdict {
  bool obstructed = false;
  Rational value;
};

/// Obstructed when the pairing of the two classes is not an integer.
IntegralityVerdict integrality_obstruction(const DivisorClass& a, const DivisorClass& b);

/// Pairings of `d` against each of `named`, in order.
RationalVector pairing_profile(const DivisorClass& d, const std::vector<DivisorClass>& named);

}  // namespace surfcalc::search
