#include "surfcalc/quotient/resolution.hpp"

#include <algorithm>
#include <set>

#include "surfcalc/exact/linear_system.hpp"

namespace surfcalc::quotient {

const std::string& QuotientLattice::transform_of(const std::string& source_label) const {
  for (std::size_t i = 0; i < source_labels.size(); ++i) {
    if (source_labels[i] == source_label) {
      return transform_labels[i];
    }
  }
  throw std::invalid_argument("no proper transform for curve " + source_label);
}

std::vector<std::string> QuotientLattice::exceptional_labels() const {
  std::vector<std::string> out;
  for (const auto& c : chains) {
    out.insert(out.end(), c.labels.begin(), c.labels.end());
  }
  return out;
}

DivisibilityError::DivisibilityError(std::string first, std::string second,
                                     const Rational& residue, long order)
    : std::domain_error("intersection data for (" + first + "," + second + ") give " +
                        residue.to_string() + ", not divisible by " + std::to_string(order)),
      first_(std::move(first)),
      second_(std::move(second)) {}

namespace {

std::vector<long> padded_mults(const curves::CurveRecord& c, std::size_t points) {
  if (c.mults.size() > points) {
    throw std::invalid_argument("curve " + c.label + " lists more multiplicities than points");
  }
  std::vector<long> m = c.mults;
  m.resize(points, 0);
  return m;
}

}  // namespace

QuotientLattice build_quotient_lattice(const CyclicQuotientSetup& setup) {
  if (setup.order < 2) {
    throw std::invalid_argument("group order must be at least 2");
  }
  if (!setup.source) {
    throw std::invalid_argument("missing source pairings");
  }
  QuotientLattice q;
  q.order = setup.order;

  std::set<std::string> seen;
  for (const auto& p : setup.points) {
    curves::validate(p.type);
    if (p.type.order != setup.order) {
      throw std::domain_error("point " + p.label + " has stabiliser order " +
                              std::to_string(p.type.order) + " but the group has order " +
                              std::to_string(setup.order));
    }
    ExceptionalChain chain{p.label, hj_chain(p.type.order, p.type.weight), {}};
    const std::size_t len = chain.chain.self_intersections.size();
    for (std::size_t k = 0; k < len; ++k) {
      chain.labels.push_back(len == 1 ? p.exceptional : p.exceptional + std::to_string(k + 1));
    }
    q.chains.push_back(std::move(chain));
  }

  for (const auto& c : setup.curves) {
    if (!c.sigma_invariant) {
      throw std::domain_error("curve " + c.label + " is not invariant under the group");
    }
    if (!setup.source->contains(c.label)) {
      throw std::invalid_argument("no source pairings for curve " + c.label);
    }
    auto m = padded_mults(c, setup.points.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] < 0) {
        throw std::domain_error("negative multiplicity of " + c.label + " at " +
                                setup.points[k].label);
      }
      if (m[k] != 0 && q.chains[k].labels.size() != 1) {
        throw std::domain_error("curve " + c.label + " passes through " + setup.points[k].label +
                                ", whose resolution is not a single curve; unsupported");
      }
    }
    q.source_labels.push_back(c.label);
    q.transform_labels.push_back(c.label + setup.transform_suffix);
    q.mults[c.label] = std::move(m);
  }

  std::vector<std::string> basis = q.transform_labels;
  for (const auto& l : q.exceptional_labels()) {
    basis.push_back(l);
  }
  for (const auto& l : basis) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate label " + l + " on the resolution");
    }
  }

  const std::size_t nt = q.transform_labels.size();
  RationalMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < nt; ++i) {
    const auto& a = q.source_labels[i];
    const auto& ma = q.mults.at(a);
    for (std::size_t j = i; j < nt; ++j) {
      const auto& b = q.source_labels[j];
      const auto& mb = q.mults.at(b);
      Rational residue = setup.source->pairing(a, b);
      for (std::size_t k = 0; k < ma.size(); ++k) {
        residue -= Rational(ma[k] * mb[k]);
      }
      const Rational value = residue / Rational(setup.order);
      if (!value.is_integer()) {
        throw DivisibilityError(a, b, residue, setup.order);
      }
      g(i, j) = value;
      g(j, i) = value;
    }
  }

  std::size_t offset = nt;
  for (std::size_t k = 0; k < q.chains.size(); ++k) {
    const auto block = q.chains[k].chain.gram();
    const std::size_t len = block.rows();
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t s = 0; s < len; ++s) {
        g(offset + r, offset + s) = block(r, s);
      }
    }
    if (len == 1) {
      for (std::size_t i = 0; i < nt; ++i) {
        const Rational m(q.mults.at(q.source_labels[i])[k]);
        g(i, offset) = m;
        g(offset, i) = m;
      }
    }
    offset += len;
  }

  q.lattice = make_lattice(setup.name, std::move(basis), std::move(g));
  return q;
}

namespace {

/// Exceptional coefficients making `d` orthogonal to every exceptional curve.
DivisorClass orthogonalise(const QuotientLattice& q, DivisorClass d, const RationalVector& target) {
  const auto& lat = *q.lattice;
  const auto exc = q.exceptional_labels();
  std::vector<std::size_t> idx;
  for (const auto& l : exc) {
    idx.push_back(lat.index_of(l));
  }
  const RationalMatrix block = lat.gram().select(idx, idx);
  const RationalVector current = pairings_with_basis(d);
  RationalVector rhs(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    rhs[k] = target[k] - current[idx[k]];
  }
  const auto sol = solve_linear_system(block, rhs);
  if (!sol.unique()) {
    throw std::domain_error("exceptional Gram block is singular");
  }
  RationalVector coords = d.coords();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    coords[idx[k]] += sol.particular[k];
  }
  return DivisorClass(q.lattice, std::move(coords));
}

}  // namespace

DivisorClass pullback(const QuotientLattice& q, const Combination& image) {
  RationalVector coords(q.lattice->rank());
  for (const auto& t : image) {
    coords[q.lattice->index_of(q.transform_of(t.label))] += t.coefficient;
  }
  const RationalVector zero(q.exceptional_labels().size());
  return orthogonalise(q, DivisorClass(q.lattice, std::move(coords)), zero);
}

DivisorClass canonical_on_resolution(const QuotientLattice& q,
                                     const Combination& source_canonical) {
  const DivisorClass base = pullback(q, source_canonical);
  // Adjunction on a smooth rational exceptional curve: K.E = -2 - E^2.
  RationalVector target;
  for (const auto& l : q.exceptional_labels()) {
    target.push_back(Rational(-2) - q.lattice->pairing(l, l));
  }
  return orthogonalise(q, base, target);
}

long quotient_genus(long genus, long order, long fixed_points) {
  if (order < 2 || fixed_points < 0 || genus < 0) {
    throw std::invalid_argument("invalid Riemann-Hurwitz data");
  }
  const long lhs = 2 * genus - 2 - (order - 1) * fixed_points;
  if (lhs % order != 0) {
    throw std::domain_error("Riemann-Hurwitz gives a non-integral genus");
  }
  const long twice_g = lhs / order + 2;
  if (twice_g < 0 || twice_g % 2 != 0) {
    throw std::domain_error("Riemann-Hurwitz gives an invalid genus");
  }
  return twice_g / 2;
}

NoetherInvariants noether_invariants(long k2, long chi, long q, long pg) {
  if (chi != 1 - q + pg) {
    throw std::invalid_argument("chi must equal 1 - q + pg");
  }
  NoetherInvariants n;
  n.euler_number = 12 * chi - k2;
  n.b2 = n.euler_number - 2 + 4 * q;
  n.h11 = n.b2 - 2 * pg;
  return n;
}

std::vector<EquivalenceCheck> verify_equivalences(
    const NamedClasses& classes, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<EquivalenceCheck> out;
  for (const auto& [lhs, rhs] : pairs) {
    const auto a = classes.evaluate(lhs);
    const auto b = classes.evaluate(rhs);
    out.push_back({lhs, rhs, numerically_equal(a, b)});
  }
  return out;
}

}  // namespace surfcalc::quotient
