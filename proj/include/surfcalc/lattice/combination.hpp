#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surfcalc/lattice/lattice.hpp"

namespace surfcalc {

struct Term {
  std::string label;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Formal rational combination of labelled curves, in first-appearance order
/// with like terms merged and zero terms dropped.
using Combination = std::vector<Term>;

/// Parses expressions such as "-3E1'+15E2'", "2/3*R1" or "1/9(E1-E3+2C1)".
/// Labels start with a letter or '_' and may contain letters, digits, '_' and
/// the prime character. Throws std::invalid_argument on malformed input.
Combination parse_combination(std::string_view text);

/// Inverse of parse_combination: "E3'+R2", "-3*E1'+1/9*C1", "0" when empty.
std::string format_combination(const Combination& terms);

Combination scale(const Combination& terms, const Rational& s);
Combination add(const Combination& a, const Combination& b);

/// Labelled classes on one lattice: the basis vectors plus any curves embedded
/// through their pairings or defined as combinations.
class NamedClasses {
 public:
  explicit NamedClasses(LatticePtr lattice);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<std::string>& labels() const { return order_; }
  bool contains(std::string_view label) const;
  /// std::invalid_argument for unknown labels.
  const DivisorClass& at(std::string_view label) const;

  /// Registers `label` as the class with the given basis pairings.
  /// Throws std::invalid_argument if `label` is already registered.
  const DivisorClass& embed_by_pairings(std::string label, std::span<const Rational> pairings);

  /// Registers `label` as an explicit class; duplicate labels rejected.
  const DivisorClass& define(std::string label, DivisorClass d);

  DivisorClass evaluate(const Combination& terms) const;
  DivisorClass evaluate(std::string_view expression) const;

 private:
  LatticePtr lattice_;
  std::map<std::string, DivisorClass, std::less<>> classes_;
  std::vector<std::string> order_;
};

}  // namespace surfcalc
