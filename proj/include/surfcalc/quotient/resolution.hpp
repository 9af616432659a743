#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "surfcalc/curves/curve.hpp"
#include "surfcalc/lattice/combination.hpp"
#include "surfcalc/quotient/hj_chain.hpp"

namespace surfcalc::quotient {

/// A fixed point of the cyclic action and the base label of the exceptional
/// chain over its image. A length-1 chain is labelled `exceptional`; longer
/// chains get `exceptional` + "1", "2", ...
struct ResolutionPoint {
  std::string label;
  curves::QuotientType type;
  std::string exceptional;
};

/// Data for the minimal resolution of the quotient of a surface by a cyclic
/// group of prime order acting with isolated fixed points.
///
/// Curve multiplicity vectors follow `points`; trailing points may be
/// omitted and then count as multiplicity zero. `source` holds the pairings
/// among the curves upstairs, keyed by curve label.
struct CyclicQuotientSetup {
  long order = 0;
  std::vector<ResolutionPoint> points;
  std::vector<curves::CurveRecord> curves;
  LatticePtr source;
  std::string transform_suffix = "'";
  std::string name = "resolution";
};

struct ExceptionalChain {
  std::string point;
  HJChain chain;
  std::vector<std::string> labels;
};

/// Lattice on {proper transforms} + {exceptional curves} of the resolution.
struct QuotientLattice {
  LatticePtr lattice;
  long order = 0;
  std::vector<std::string> source_labels;
  std::vector<std::string> transform_labels;
  std::vector<ExceptionalChain> chains;
  /// Per source curve, multiplicities padded to the full point list.
  std::map<std::string, std::vector<long>> mults;

  const std::string& transform_of(const std::string& source_label) const;
  std::vector<std::string> exceptional_labels() const;
};

/// Raised when (A.B - sum m_A m_B) is not divisible by the group order: the
/// input data are inconsistent with the quotient.
class DivisibilityError : public std::domain_error {
 public:
  DivisibilityError(std::string first, std::string second, const Rational& residue, long order);

  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

/// A'.B' = (A.B - sum_k m_{A,k} m_{B,k}) / d for all transform pairs (A = B
/// included), A'.R_k = m_{A,k} on the length-1 chain of a 1/d(1,1) point,
/// Hirzebruch-Jung blocks on the chains, zero elsewhere.
QuotientLattice build_quotient_lattice(const CyclicQuotientSetup& setup);

/// Numerical pullback of a combination of image curves (given by their
/// source labels): proper transforms plus the unique exceptional part
/// orthogonal to every exceptional curve.
DivisorClass pullback(const QuotientLattice& q, const Combination& image);

/// K of the resolution: pullback of the image of `source_canonical` plus the
/// exceptional discrepancy fixed by adjunction on each exceptional curve.
DivisorClass canonical_on_resolution(const QuotientLattice& q, const Combination& source_canonical);

/// Riemann-Hurwitz for a cyclic cover of prime order d totally ramified at
/// `fixed_points`: 2g - 2 = d (2g' - 2) + (d - 1) * fixed_points.
/// Throws std::domain_error if g' is not a non-negative integer.
long quotient_genus(long genus, long order, long fixed_points);

struct NoetherInvariants {
  long euler_number = 0;
  long b2 = 0;
  long h11 = 0;

  friend bool operator==(const NoetherInvariants&, const NoetherInvariants&) = default;
};

/// e = 12 chi - K^2, b2 = e - 2 + 4q, h11 = b2 - 2 pg.
/// Throws std::invalid_argument unless chi = 1 - q + pg.
NoetherInvariants noether_invariants(long k2, long chi, long q, long pg);

struct EquivalenceCheck {
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

/// Numerical equivalence of each (lhs, rhs) pair of combinations.
/// Unknown labels raise std::invalid_argument.
std::vector<EquivalenceCheck> verify_equivalences(
    const NamedClasses& classes, const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace surfcalc::quotient
