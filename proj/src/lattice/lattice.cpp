#include "surfcalc/lattice/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "surfcalc/exact/linear_system.hpp"
#include "surfcalc/lattice/combination.hpp"

namespace surfcalc {

IntersectionLattice::IntersectionLattice(std::string name, std::vector<std::string> basis,
                                         RationalMatrix gram)
    : name_(std::move(name)), basis_(std::move(basis)), gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() != basis_.size()) {
    throw std::invalid_argument("lattice '" + name_ + "': Gram matrix is " +
                                std::to_string(gram_.rows()) + "x" + std::to_string(gram_.cols()) +
                                " for " + std::to_string(basis_.size()) + " basis labels");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (gram_(i, j) != gram_(j, i)) {
        throw std::invalid_argument("lattice '" + name_ + "': Gram matrix not symmetric at (" +
                                    basis_[i] + "," + basis_[j] + ")");
      }
    }
  }
  std::set<std::string> seen;
  for (const auto& label : basis_) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("lattice '" + name_ + "': duplicate basis label " + label);
    }
  }
}

std::optional<std::size_t> IntersectionLattice::find(std::string_view label) const {
  const auto it = std::find(basis_.begin(), basis_.end(), label);
  if (it == basis_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t IntersectionLattice::index_of(std::string_view label) const {
  if (auto idx = find(label)) {
    return *idx;
  }
  throw std::invalid_argument("lattice '" + name_ + "' has no basis label '" +
                              std::string(label) + "'");
}

const Rational& IntersectionLattice::pairing(std::string_view a, std::string_view b) const {
  return gram_(index_of(a), index_of(b));
}

bool IntersectionLattice::same_as(const IntersectionLattice& other) const {
  return this == &other ||
         (name_ == other.name_ && basis_ == other.basis_ && gram_ == other.gram_);
}

LatticePtr make_lattice(std::string name, std::vector<std::string> basis, RationalMatrix gram) {
  return std::make_shared<const IntersectionLattice>(std::move(name), std::move(basis),
                                                     std::move(gram));
}

LatticePtr sublattice(const IntersectionLattice& parent, const std::vector<std::string>& labels,
                      std::string name) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& label : labels) {
    idx.push_back(parent.index_of(label));
  }
  return make_lattice(std::move(name), labels, parent.gram().select(idx, idx));
}

DivisorClass::DivisorClass(LatticePtr lattice, RationalVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) {
    throw std::invalid_argument("divisor class without a lattice");
  }
  if (coords_.size() != lattice_->rank()) {
    throw std::invalid_argument("class on lattice '" + lattice_->name() + "' has " +
                                std::to_string(coords_.size()) + " coordinates, rank is " +
                                std::to_string(lattice_->rank()));
  }
}

DivisorClass DivisorClass::zero(LatticePtr lattice) {
  const std::size_t n = lattice->rank();
  return DivisorClass(std::move(lattice), RationalVector(n));
}

DivisorClass DivisorClass::basis_vector(LatticePtr lattice, std::string_view label) {
  const std::size_t i = lattice->index_of(label);
  DivisorClass d = zero(std::move(lattice));
  d.coords_[i] = 1;
  return d;
}

const Rational& DivisorClass::coefficient(std::string_view label) const {
  return coords_[lattice_->index_of(label)];
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q.is_zero(); });
}

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (!a.lattice()->same_as(*b.lattice())) {
    throw std::invalid_argument("lattice mismatch: '" + a.lattice()->name() + "' vs '" +
                                b.lattice()->name() + "'");
  }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
  require_same_lattice(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] += rhs.coords_[i];
  }
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
  require_same_lattice(*this, rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] -= rhs.coords_[i];
  }
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
  for (auto& c : coords_) {
    c *= s;
  }
  return *this;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out = *this;
  out *= Rational(-1);
  return out;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.lattice_->same_as(*b.lattice_) && a.coords_ == b.coords_;
}

std::string DivisorClass::to_string() const {
  Combination terms;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) {
      terms.push_back({lattice_->basis()[i], coords_[i]});
    }
  }
  return format_combination(terms);
}

Rational pair(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  return dot(a.coords(), a.lattice()->gram().apply(b.coords()));
}

RationalVector pairings_with_basis(const DivisorClass& d) {
  return d.lattice()->gram().apply(d.coords());
}

DivisorClass coords_from_pairings(const LatticePtr& lattice, std::span<const Rational> pairings) {
  if (pairings.size() != lattice->rank()) {
    throw std::invalid_argument("expected " + std::to_string(lattice->rank()) +
                                " pairings for lattice '" + lattice->name() + "', got " +
                                std::to_string(pairings.size()));
  }
  const AffineSolution sol = solve_linear_system(lattice->gram(), pairings);
  if (!sol.consistent || !sol.unique()) {
    throw std::domain_error("lattice '" + lattice->name() +
                            "' has a degenerate Gram matrix; pairings do not determine a class");
  }
  return DivisorClass(lattice, sol.particular);
}

bool numerically_equal(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  const RationalVector diff = pairings_with_basis(a - b);
  return std::all_of(diff.begin(), diff.end(), [](const Rational& q) { return q.is_zero(); });
}

}  // namespace surfcalc
