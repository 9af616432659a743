#include "surfcalc/exact/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace surfcalc {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RationalVector> copy;
  for (const auto& r : rows) {
    copy.emplace_back(r);
  }
  return from_rows(copy);
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) {
      throw std::invalid_argument("ragged matrix rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RationalMatrix(r, c, std::move(entries));
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) {
    return false;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) {
        return false;
      }
    }
  }
  return true;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.push_back((*this)(r, c));
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

RationalVector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("vector length does not match matrix columns");
  }
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !v[c].is_zero()) {
        acc += (*this)(r, c) * v[c];
      }
    }
    out[r] = acc;
  }
  return out;
}

RationalMatrix RationalMatrix::select(std::span<const std::size_t> row_idx,
                                      std::span<const std::size_t> col_idx) const {
  RationalMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("matrix product dimension mismatch");
  }
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& lhs = a(i, k);
      if (lhs.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) {
          out(i, j) += lhs * b(k, j);
        }
      }
    }
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : ",[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) {
        out += ",";
      }
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k).is_zero()) {
      ++pivot;
    }
    if (pivot == n) {
      return 0;
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(k, c), a(pivot, c));
      }
      det = -det;
    }
    const Rational p = a(k, k);
    det *= p;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k).is_zero()) {
        continue;
      }
      const Rational factor = a(r, k) / p;
      for (std::size_t c = k; c < n; ++c) {
        a(r, c) -= factor * a(k, c);
      }
    }
  }
  return det;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c).is_zero()) {
      ++pivot;
    }
    if (pivot == a.rows()) {
      continue;
    }
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::swap(a(r, k), a(pivot, k));
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) {
        continue;
      }
      const Rational factor = a(i, c) / a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        a(i, k) -= factor * a(r, k);
      }
    }
    ++r;
  }
  return r;
}

Rational trace(const RationalMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("trace of a non-square matrix");
  }
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    t += m(i, i);
  }
  return t;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot product length mismatch");
  }
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += a[i] * b[i];
  }
  return acc;
}

}  // namespace surfcalc
