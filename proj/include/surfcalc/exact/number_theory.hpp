#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "surfcalc/exact/rational.hpp"

namespace surfcalc {

/// Non-negative integer square root of `n` if `n` is a perfect square.
/// Throws std::domain_error for negative `n`.
std::optional<Integer> is_perfect_square(const Integer& n);

/// Non-negative rational square root of `q`, when numerator and denominator
/// are both perfect squares. Negative input yields nothing.
std::optional<Rational> rational_is_square(const Rational& q);

/// All ordered pairs (u, s) with u, s >= 0 and u^2 + s^2 = n, sorted by u.
std::vector<std::pair<Integer, Integer>> two_square_representations(const Integer& n);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

}  // namespace surfcalc
