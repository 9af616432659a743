#pragma once

#include <span>
#include <vector>

#include "surfcalc/exact/matrix.hpp"

namespace surfcalc {

/// Solution set of a linear system A x = b over the rationals.
///
/// When `consistent`, every solution is `particular + sum t_i null_space[i]`
/// for rational t_i; an empty null space means the solution is unique.
struct AffineSolution {
  bool consistent = false;
  RationalVector particular;
  std::vector<RationalVector> null_space;

  bool unique() const { return consistent && null_space.empty(); }
};

/// Exact reduced row echelon solve. Inconsistency is reported in the result.
AffineSolution solve_linear_system(const RationalMatrix& coeffs, std::span<const Rational> rhs);

}  // namespace surfcalc
