#include "surfcalc/exact/linear_system.hpp"

#include <stdexcept>
#include <utility>

namespace surfcalc {

AffineSolution solve_linear_system(const RationalMatrix& coeffs, std::span<const Rational> rhs) {
  if (coeffs.rows() != rhs.size()) {
    throw std::invalid_argument("right-hand side has " + std::to_string(rhs.size()) +
                                " entries for " + std::to_string(coeffs.rows()) + " equations");
  }
  const std::size_t rows = coeffs.rows();
  const std::size_t cols = coeffs.cols();

  // Augmented matrix [A | b] reduced in place.
  RationalMatrix aug(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      aug(r, c) = coeffs(r, c);
    }
    aug(r, cols) = rhs[r];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && aug(pivot, c).is_zero()) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    for (std::size_t k = 0; k <= cols; ++k) {
      std::swap(aug(lead, k), aug(pivot, k));
    }
    const Rational p = aug(lead, c);
    for (std::size_t k = 0; k <= cols; ++k) {
      aug(lead, k) /= p;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || aug(r, c).is_zero()) {
        continue;
      }
      const Rational factor = aug(r, c);
      for (std::size_t k = 0; k <= cols; ++k) {
        aug(r, k) -= factor * aug(lead, k);
      }
    }
    pivot_cols.push_back(c);
    ++lead;
  }

  AffineSolution out;
  for (std::size_t r = lead; r < rows; ++r) {
    if (!aug(r, cols).is_zero()) {
      return out;
    }
  }
  out.consistent = true;
  out.particular.assign(cols, Rational{});
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    out.particular[pivot_cols[i]] = aug(i, cols);
    is_pivot[pivot_cols[i]] = true;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    RationalVector direction(cols);
    direction[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      direction[pivot_cols[i]] = -aug(i, free);
    }
    out.null_space.push_back(std::move(direction));
  }
  return out;
}

}  // namespace surfcalc
