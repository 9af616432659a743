#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "surfcalc/exact/matrix.hpp"

namespace surfcalc {

/// A named basis of curve labels together with their symmetric Gram matrix.
///
/// The Gram matrix may be degenerate: a lattice built on a list of curves
/// (rather than on a basis of the Neron-Severi group) still supports pairing
/// of formal combinations.
class IntersectionLattice {
 public:
  /// Throws std::invalid_argument on a non-square or asymmetric Gram matrix,
  /// a size mismatch with `basis`, or duplicate labels.
  IntersectionLattice(std::string name, std::vector<std::string> basis, RationalMatrix gram);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const RationalMatrix& gram() const { return gram_; }
  std::size_t rank() const { return basis_.size(); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; std::invalid_argument if absent.
  std::size_t index_of(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }

  const Rational& pairing(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const Rational& pairing(std::string_view a, std::string_view b) const;

  bool same_as(const IntersectionLattice& other) const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  RationalMatrix gram_;
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

LatticePtr make_lattice(std::string name, std::vector<std::string> basis, RationalMatrix gram);

/// Restriction of `parent` to the listed basis labels, in the given order.
LatticePtr sublattice(const IntersectionLattice& parent, const std::vector<std::string>& labels,
                      std::string name);

/// Rational coordinate vector over a lattice basis.
class DivisorClass {
 public:
  /// Throws std::invalid_argument when the coordinate count differs from the rank.
  DivisorClass(LatticePtr lattice, RationalVector coords);

  static DivisorClass zero(LatticePtr lattice);
  static DivisorClass basis_vector(LatticePtr lattice, std::string_view label);

  const LatticePtr& lattice() const { return lattice_; }
  const RationalVector& coords() const { return coords_; }
  const Rational& coefficient(std::string_view label) const;

  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& rhs);
  DivisorClass& operator-=(const DivisorClass& rhs);
  DivisorClass& operator*=(const Rational& s);
  DivisorClass operator-() const;

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass d) { return d *= s; }
  friend DivisorClass operator*(DivisorClass d, const Rational& s) { return d *= s; }

  /// Structural equality: same lattice and identical coordinates.
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

  /// Formal-combination rendering over the basis labels, e.g. "E3'+R2".
  std::string to_string() const;

 private:
  LatticePtr lattice_;
  RationalVector coords_;
};

/// Throws std::invalid_argument unless both classes live on the same lattice.
void require_same_lattice(const DivisorClass& a, const DivisorClass& b);

/// coords(a)^T * Gram * coords(b).
Rational pair(const DivisorClass& a, const DivisorClass& b);

/// Pairings of `d` with every basis element, in basis order.
RationalVector pairings_with_basis(const DivisorClass& d);

/// The unique class whose pairings with the basis equal `pairings`.
/// Throws std::domain_error on a degenerate Gram matrix.
DivisorClass coords_from_pairings(const LatticePtr& lattice, std::span<const Rational> pairings);

/// True iff `a - b` pairs to zero with every basis element. On a
/// nondegenerate lattice this is coordinate equality.
bool numerically_equal(const DivisorClass& a, const DivisorClass& b);

}  // namespace surfcalc
