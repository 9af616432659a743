#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "surfcalc/exact/rational.hpp"

namespace surfcalc {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const { return entries_; }
  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  RationalVector apply(std::span<const Rational> v) const;

  /// Submatrix on the given row and column indices, in order.
  RationalMatrix select(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by Gaussian elimination over the rationals.
/// Throws std::invalid_argument for non-square input.
Rational determinant(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
Rational trace(const RationalMatrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace surfcalc
