#include "surfcalc/search/class_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "surfcalc/exact/linear_system.hpp"
#include "surfcalc/exact/number_theory.hpp"

namespace surfcalc::search {

namespace {

constexpr std::size_t kA = 0;
constexpr std::size_t kB = 1;
constexpr std::size_t kC = 2;

// Inverse Gram scaled to an integer matrix by the lcm of its denominators.
struct ScaledInverse {
  Integer scale;
  std::vector<Integer> entries;  // row-major 3x3

  const Integer& at(std::size_t i, std::size_t j) const { return entries[i * 3 + j]; }
};

ScaledInverse scaled_inverse(const IntersectionLattice& lattice) {
  if (lattice.rank() != 3) {
    throw std::domain_error("class search needs a rank-3 lattice, '" + lattice.name() +
                            "' has rank " + std::to_string(lattice.rank()));
  }
  RationalMatrix inverse(3, 3);
  for (std::size_t col = 0; col < 3; ++col) {
    RationalVector unit(3);
    unit[col] = 1;
    const AffineSolution sol = solve_linear_system(lattice.gram(), unit);
    if (!sol.unique()) {
      throw std::domain_error("class search on degenerate lattice '" + lattice.name() + "'");
    }
    for (std::size_t row = 0; row < 3; ++row) {
      inverse(row, col) = sol.particular[row];
    }
  }
  Integer lcm = 1;
  for (const auto& q : inverse.entries()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t());
  }
  ScaledInverse out{lcm, {}};
  for (const auto& q : inverse.entries()) {
    out.entries.push_back((q * Rational(lcm)).to_integer());
  }
  return out;
}

QuadraticInC quadratic_from(const ScaledInverse& m, const Integer& a, const Integer& b,
                            const Integer& d2) {
  QuadraticInC q;
  q.lead = m.at(kC, kC);
  q.half_linear = m.at(kA, kC) * a + m.at(kB, kC) * b;
  q.constant = m.at(kA, kA) * a * a + 2 * m.at(kA, kB) * a * b + m.at(kB, kB) * b * b -
               m.scale * d2;
  return q;
}

}  // namespace

Integer QuadraticInC::quarter_discriminant() const {
  return half_linear * half_linear - lead * constant;
}

QuadraticInC quadratic_in_c(const IntersectionLattice& lattice, const Integer& a,
                            const Integer& b, const Integer& d2) {
  return quadratic_from(scaled_inverse(lattice), a, b, d2);
}

std::vector<SearchSolution> enumerate_classes(const SearchProblem& problem) {
  const ScaledInverse m = scaled_inverse(*problem.lattice);
  if (m.at(kC, kC) == 0) {
    throw std::domain_error("class search: quadratic in c degenerates to a linear equation");
  }
  const Integer& b = problem.target_kd;
  const Integer& d2 = problem.target_d2;

  // The quarter-discriminant is a quadratic in a; sample it to read off
  // its coefficients exactly.
  auto disc = [&](const Integer& a) { return quadratic_from(m, a, b, d2).quarter_discriminant(); };
  const Integer f0 = disc(0);
  const Integer f1 = disc(1);
  const Integer fm1 = disc(-1);
  const Integer two_lead = f1 + fm1 - 2 * f0;  // 2 * coefficient of a^2
  const Integer two_linear = f1 - fm1;         // 2 * coefficient of a
  if (two_lead >= 0) {
    throw std::domain_error("class search: discriminant does not bound the search variable");
  }

  // Concave in a, so the admissible a form one contiguous run around the vertex.
  Integer vertex;
  {
    const Integer num = -two_linear;
    const Integer den = 2 * two_lead;
    mpz_fdiv_q(vertex.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> admissible;
  for (Integer a = vertex; disc(a) >= 0; --a) {
    admissible.push_back(a);
  }
  for (Integer a = vertex + 1; disc(a) >= 0; ++a) {
    admissible.push_back(a);
  }

  std::vector<SearchSolution> out;
  for (const auto& a : admissible) {
    const QuadraticInC quad = quadratic_from(m, a, b, d2);
    const auto s = is_perfect_square(quad.quarter_discriminant());
    if (!s) {
      continue;
    }
    std::vector<Integer> roots;
    for (const Integer& numerator : {Integer(-quad.half_linear + *s), Integer(-quad.half_linear - *s)}) {
      if (mpz_divisible_p(numerator.get_mpz_t(), quad.lead.get_mpz_t()) == 0) {
        continue;
      }
      Integer c = numerator / quad.lead;
      if (std::find(roots.begin(), roots.end(), c) == roots.end()) {
        roots.push_back(c);
      }
    }
    for (const auto& c : roots) {
      const RationalVector pairings{Rational(a), Rational(b), Rational(c)};
      DivisorClass d = coords_from_pairings(problem.lattice, pairings);
      if (pair(d, d) != Rational(d2) || pairings_with_basis(d) != pairings) {
        throw std::logic_error("class search produced a class violating its defining equations");
      }
      out.push_back({a, b, c, *s, std::move(d)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SearchSolution& x, const SearchSolution& y) {
    return x.a != y.a ? x.a < y.a : x.c < y.c;
  });
  return out;
}

IntegralityVerdict integrality_obstruction(const DivisorClass& a, const DivisorClass& b) {
  const Rational value = pair(a, b);
  return {!value.is_integer(), value};
}

RationalVector pairing_profile(const DivisorClass& d, const std::vector<DivisorClass>& named) {
  RationalVector out;
  out.reserve(named.size());
  for (const auto& other : named) {
    out.push_back(pair(d, other));
  }
  return out;
}

}  // namespace surfcalc::search
