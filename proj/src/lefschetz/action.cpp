#include "surfcalc/lefschetz/action.hpp"

#include <algorithm>
#include <stdexcept>

#include "surfcalc/exact/linear_system.hpp"
#include "surfcalc/exact/number_theory.hpp"

namespace surfcalc::lefschetz {

Rational ActionMatrix::trace() const { return surfcalc::trace(matrix); }

DivisorClass ActionMatrix::apply(const DivisorClass& d) const {
  if (d.lattice() != lattice && !d.lattice()->same_as(*lattice)) {
    throw std::invalid_argument("class lives on a different lattice");
  }
  return DivisorClass(lattice, matrix.apply(d.coords()));
}

ActionMatrix build_action(const NamedClasses& classes, const quotient::InvolutionSpec& spec,
                          const std::map<std::string, DivisorClass>& overrides) {
  const auto& lat = classes.lattice();
  const auto perm = spec.permutation();
  const std::size_t n = lat->rank();
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& label = lat->basis()[j];
    RationalVector image;
    if (const auto o = overrides.find(label); o != overrides.end()) {
      image = o->second.coords();
    } else if (const auto p = perm.find(label); p != perm.end()) {
      image = classes.at(p->second).coords();
    } else {
      image = DivisorClass::basis_vector(lat, label).coords();
    }
    for (std::size_t i = 0; i < n; ++i) {
      m(i, j) = image[i];
    }
  }
  if (m.transpose() * lat->gram() * m != lat->gram()) {
    throw std::domain_error("action does not preserve the intersection form");
  }
  if (m * m != RationalMatrix::identity(n)) {
    throw std::domain_error("action is not an involution");
  }
  return {lat, std::move(m)};
}

bool negative_definite(const RationalMatrix& m) {
  if (!m.is_symmetric()) {
    return false;
  }
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
      idx[i] = i;
    }
    const int s = determinant(m.select(idx, idx)).sign();
    if (s != (k % 2 == 1 ? -1 : 1)) {
      return false;
    }
  }
  return true;
}

CandidateAnalysis alpha_candidates(const NamedClasses& classes, const quotient::InvolutionSpec& spec,
                                   const CandidateProblem& problem) {
  const auto& lat = classes.lattice();
  const auto perm = spec.permutation();
  auto partner = [&](const std::string& label) {
    const auto it = perm.find(label);
    return it == perm.end() ? label : it->second;
  };
  const DivisorClass curve = classes.at(problem.curve);

  for (const auto& r : problem.residual) {
    for (const auto& s : problem.support) {
      if (!lat->pairing(r, s).is_zero()) {
        throw std::domain_error("residual curve " + r + " meets support curve " + s);
      }
    }
    for (const auto& t : problem.test_curves) {
      if (!pair(classes.at(r), classes.at(t)).is_zero()) {
        throw std::domain_error("residual curve " + r + " meets test curve " + t);
      }
    }
  }
  std::vector<std::size_t> ridx;
  for (const auto& r : problem.residual) {
    ridx.push_back(lat->index_of(r));
  }
  if (!ridx.empty() && !negative_definite(lat->gram().select(ridx, ridx))) {
    throw std::domain_error("residual block is not negative definite");
  }

  // Rows: test curves; columns: support coefficients.
  const std::size_t ns = problem.support.size();
  RationalMatrix coeffs(problem.test_curves.size(), ns);
  RationalVector rhs;
  for (std::size_t i = 0; i < problem.test_curves.size(); ++i) {
    const auto& t = classes.at(problem.test_curves[i]);
    for (std::size_t j = 0; j < ns; ++j) {
      coeffs(i, j) = pair(classes.at(problem.support[j]), t);
    }
    rhs.push_back(pair(curve, classes.at(partner(problem.test_curves[i]))));
  }
  const auto sol = solve_linear_system(coeffs, rhs);
  if (!sol.consistent || sol.null_space.size() != 1) {
    throw std::domain_error("linear conditions do not leave exactly one free parameter");
  }
  const auto pit = std::find(problem.support.begin(), problem.support.end(), problem.parameter);
  if (pit == problem.support.end()) {
    throw std::invalid_argument("parameter " + problem.parameter + " is not a support curve");
  }
  const std::size_t pk = static_cast<std::size_t>(pit - problem.support.begin());
  RationalVector dir = sol.null_space.front();
  if (dir[pk].is_zero()) {
    throw std::domain_error("parameter " + problem.parameter + " is fixed by the linear conditions");
  }
  const Rational scale_dir = Rational(1) / dir[pk];
  for (auto& v : dir) {
    v *= scale_dir;
  }
  RationalVector part = sol.particular;
  const Rational shift = part[pk];
  for (std::size_t j = 0; j < ns; ++j) {
    part[j] -= shift * dir[j];
  }

  auto embed = [&](const RationalVector& c) {
    DivisorClass d = DivisorClass::zero(lat);
    for (std::size_t j = 0; j < ns; ++j) {
      d += c[j] * classes.at(problem.support[j]);
    }
    return d;
  };
  CandidateAnalysis out{embed(part), embed(dir), {}, {}, {}, {}, {}};
  out.lead = pair(out.direction, out.direction);
  out.linear = Rational(2) * pair(out.particular, out.direction);
  out.constant = pair(out.particular, out.particular);

  // Sigma^2 = f(x) := curve^2 - (lead x^2 + linear x + constant) must be
  // <= 0, which confines x to the interval between the roots of f.
  const Rational a = -out.lead;
  const Rational b = -out.linear;
  const Rational c = pair(curve, curve) - out.constant;
  if (a.sign() <= 0) {
    throw std::domain_error("image norm does not bound the parameter");
  }
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) {
    return out;
  }
  const Rational centre = -b / (Rational(2) * a);
  // sqrt(disc) / (2a) <= (isqrt(ceil disc) + 1) * ceil(1 / (2a)).
  const Integer half_width =
      (isqrt(disc.ceil()) + 1) * (Rational(1) / (Rational(2) * a)).ceil();
  const Integer lo = centre.floor() - half_width;
  const Integer hi = centre.ceil() + half_width;
  for (Integer xi = lo; xi <= hi; ++xi) {
    const Rational x(xi);
    const Rational f = a * x * x + b * x + c;
    if (f.sign() > 0) {
      continue;
    }
    if (f.sign() < 0) {
      throw std::domain_error("integral parameter " + to_string(xi) +
                              " would need a residual of negative norm; not decided");
    }
    out.parameters.push_back(xi.get_si());
    out.candidates.push_back(out.particular + x * out.direction);
  }
  return out;
}

}  // namespace surfcalc::lefschetz
