#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfcalc/lattice/lattice.hpp"

namespace surfcalc::quotient {

/// Two basis curves exchanged by the involution, with the label of their
/// common image downstairs.
struct SwapOrbit {
  std::string first;
  std::string second;
  std::string image;
};

/// A basis curve mapped to itself.
struct InvariantCurve {
  std::string label;
  std::string image;
};

/// Two exceptional chains exchanged member by member:
/// first[i] <-> second[i], with image image[i].
struct ChainOrbitPair {
  std::vector<std::string> first;
  std::vector<std::string> second;
  std::vector<std::string> image;
};

/// A fixed-point-free involution acting on a lattice basis by permutation.
struct InvolutionSpec {
  std::vector<SwapOrbit> swaps;
  std::vector<InvariantCurve> fixed;
  std::vector<ChainOrbitPair> chain_orbit_pairs;

  struct Orbit {
    std::vector<std::string> members;
    std::string image;
  };
  std::vector<Orbit> orbits() const;

  /// Label -> label of its partner (itself for invariant curves).
  std::map<std::string, std::string> permutation() const;
};

/// Throws std::invalid_argument unless the orbits partition the basis of
/// `lattice` and chain orbit pairs have matching lengths; std::domain_error
/// if the permutation does not preserve the Gram matrix.
void validate_involution(const InvolutionSpec& spec, const IntersectionLattice& lattice);

/// Gram matrix on orbit images: image(O).image(O') = (1/2) (sum O).(sum O').
LatticePtr free_involution_quotient(const IntersectionLattice& lattice, const InvolutionSpec& spec,
                                    std::string name);

/// The image of `d` under the involution.
DivisorClass apply_involution(const InvolutionSpec& spec, const DivisorClass& d);

/// The class downstairs whose pullback is the invariant class `d`.
/// Throws std::domain_error if `d` is not invariant.
DivisorClass descend_class(const InvolutionSpec& spec, const DivisorClass& d,
                           const LatticePtr& quotient);

}  // namespace surfcalc::quotient
