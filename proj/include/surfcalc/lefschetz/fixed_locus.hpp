#pragma once

#include <string>
#include <vector>

#include "surfcalc/exact/rational.hpp"

namespace surfcalc::lefschetz {

/// e(fixed locus) = 2 - q_terms + trace on NS + 2 * h20_sign, for an
/// involution on a surface with h^{2,0} = 1. `q_terms` is the trace on
/// H^1 + H^3 (zero when b_1 = 0).
long topological_constraint(long trace_ns, int h20_sign, long q_terms = 0);

struct FixedCurve {
  long genus = 0;
  Rational self_intersection;
};

/// Fixed locus of an involution: 2m isolated points and a list of curves.
struct FixedLocusHypothesis {
  long m = 0;
  std::vector<FixedCurve> curves;
  int h20_sign = -1;

  /// Throws std::invalid_argument on m < 0, negative genus or a sign other
  /// than +1/-1.
  void validate() const;
  /// 2m + sum (2 - 2 g(A_i)).
  long euler_number() const;
};

/// (1 + h20_sign) - [e_fixed / 4 + sum A_i^2 / 4]; zero iff the hypothesis
/// satisfies the holomorphic Lefschetz formula.
Rational holomorphic_constraint(const FixedLocusHypothesis& h);

/// What the two Lefschetz formulas force on A = sum A_i for a given branch:
/// A^2 = sum_a2 and K.A = 2m + ka_offset.
struct FixedCurveBudget {
  long e_fixed = 0;
  Rational sum_a2;
  Rational ka_offset;

  /// E.g. "sum A^2 = 6, sum K.A = 2m-8".
  std::string to_string() const;
};

FixedCurveBudget fixed_curve_budget(long trace_ns, int h20_sign, long q_terms = 0);

}  // namespace surfcalc::lefschetz
