#pragma once

#include <vector>

#include "surfcalc/curves/curve.hpp"
#include "surfcalc/exact/matrix.hpp"

namespace surfcalc::quotient {

/// Exceptional chain of the minimal resolution of a cyclic quotient
/// singularity: self-intersections -c_1, ..., -c_r with
/// n/a = c_1 - 1/(c_2 - 1/(... - 1/c_r)).
struct HJChain {
  curves::QuotientType singularity;
  std::vector<long> self_intersections;

  /// Tridiagonal Gram block: diagonal -c_i, neighbours meet once.
  RationalMatrix gram() const;
};

/// Throws std::domain_error for invalid (n, a).
HJChain hj_chain(long n, long a);

/// Evaluates the negative-regular continued fraction of a chain back to n/a.
Rational continued_fraction_value(const std::vector<long>& self_intersections);

}  // namespace surfcalc::quotient
