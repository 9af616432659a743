#include "surfcalc/quotient/involution.hpp"

#include <set>
#include <stdexcept>

namespace surfcalc::quotient {

std::vector<InvolutionSpec::Orbit> InvolutionSpec::orbits() const {
  std::vector<Orbit> out;
  for (const auto& s : swaps) {
    out.push_back({{s.first, s.second}, s.image});
  }
  for (const auto& f : fixed) {
    out.push_back({{f.label}, f.image});
  }
  for (const auto& c : chain_orbit_pairs) {
    if (c.first.size() != c.second.size() || c.first.size() != c.image.size()) {
      throw std::invalid_argument("chain orbit pair with mismatched lengths");
    }
    for (std::size_t i = 0; i < c.first.size(); ++i) {
      out.push_back({{c.first[i], c.second[i]}, c.image[i]});
    }
  }
  return out;
}

std::map<std::string, std::string> InvolutionSpec::permutation() const {
  std::map<std::string, std::string> perm;
  for (const auto& o : orbits()) {
    const auto& a = o.members.front();
    const auto& b = o.members.back();
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!perm.emplace(x, y).second && perm[x] != y) {
        throw std::invalid_argument("label " + x + " appears in two orbits");
      }
    }
  }
  return perm;
}

void validate_involution(const InvolutionSpec& spec, const IntersectionLattice& lattice) {
  std::set<std::string> covered;
  std::set<std::string> images;
  for (const auto& o : spec.orbits()) {
    for (const auto& m : o.members) {
      if (!lattice.contains(m)) {
        throw std::invalid_argument("involution refers to unknown label " + m);
      }
      if (!covered.insert(m).second) {
        throw std::invalid_argument("label " + m + " appears in two orbits");
      }
    }
    if (o.members.size() == 2 && o.members[0] == o.members[1]) {
      throw std::invalid_argument("swap of " + o.members[0] + " with itself");
    }
    if (!images.insert(o.image).second) {
      throw std::invalid_argument("image label " + o.image + " used twice");
    }
  }
  for (const auto& l : lattice.basis()) {
    if (!covered.count(l)) {
      throw std::invalid_argument("involution does not say where " + l + " goes");
    }
  }
  const auto perm = spec.permutation();
  for (const auto& a : lattice.basis()) {
    for (const auto& b : lattice.basis()) {
      if (lattice.pairing(a, b) != lattice.pairing(perm.at(a), perm.at(b))) {
        throw std::domain_error("involution does not preserve the intersection form at (" + a +
                                "," + b + ")");
      }
    }
  }
}

LatticePtr free_involution_quotient(const IntersectionLattice& lattice, const InvolutionSpec& spec,
                                    std::string name) {
  validate_involution(spec, lattice);
  const auto orbits = spec.orbits();
  std::vector<std::string> basis;
  for (const auto& o : orbits) {
    basis.push_back(o.image);
  }
  RationalMatrix g(orbits.size(), orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (std::size_t j = 0; j < orbits.size(); ++j) {
      Rational total;
      for (const auto& a : orbits[i].members) {
        for (const auto& b : orbits[j].members) {
          total += lattice.pairing(a, b);
        }
      }
      // A fixed orbit has one member, standing for q^* of its image.
      g(i, j) = total / Rational(2);
    }
  }
  return make_lattice(std::move(name), std::move(basis), std::move(g));
}

DivisorClass apply_involution(const InvolutionSpec& spec, const DivisorClass& d) {
  const auto& lat = *d.lattice();
  const auto perm = spec.permutation();
  RationalVector coords(lat.rank());
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    const auto it = perm.find(lat.basis()[i]);
    if (it == perm.end()) {
      throw std::invalid_argument("involution does not say where " + lat.basis()[i] + " goes");
    }
    coords[lat.index_of(it->second)] += d.coords()[i];
  }
  return DivisorClass(d.lattice(), std::move(coords));
}

DivisorClass descend_class(const InvolutionSpec& spec, const DivisorClass& d,
                           const LatticePtr& quotient) {
  RationalVector coords(quotient->rank());
  for (const auto& o : spec.orbits()) {
    const Rational& c = d.coefficient(o.members.front());
    for (const auto& m : o.members) {
      if (d.coefficient(m) != c) {
        throw std::domain_error("class " + d.to_string() + " is not invariant under the involution");
      }
    }
    coords[quotient->index_of(o.image)] = c;
  }
  return DivisorClass(quotient, std::move(coords));
}

}  // namespace surfcalc::quotient
