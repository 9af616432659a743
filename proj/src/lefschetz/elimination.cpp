#include "surfcalc/lefschetz/elimination.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "surfcalc/exact/linear_system.hpp"
#include "surfcalc/exact/number_theory.hpp"

namespace surfcalc::lefschetz {

namespace {

std::vector<DivisorClass> evaluate_generators(const NamedClasses& classes, const ClassAnsatz& a) {
  if (a.variables.size() != a.generators.size()) {
    throw std::invalid_argument("ansatz needs one variable per generator");
  }
  std::vector<DivisorClass> out;
  for (const auto& g : a.generators) {
    out.push_back(classes.evaluate(g));
  }
  return out;
}

Rational quadratic_value(const RationalMatrix& q, const RationalVector& a, const RationalVector& b) {
  return dot(a, q.apply(b));
}

}  // namespace

RationalMatrix ansatz_quadratic_form(const NamedClasses& classes, const ClassAnsatz& ansatz) {
  const auto gens = evaluate_generators(classes, ansatz);
  RationalMatrix q(gens.size(), gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      q(i, j) = pair(gens[i], gens[j]);
    }
  }
  return q;
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::solved:
      return "solved";
    case SolveStatus::no_rational_solution:
      return "no rational solution";
    case SolveStatus::underdetermined:
      return "underdetermined";
    case SolveStatus::inconsistent:
      return "inconsistent linear targets";
  }
  return "?";
}

ClassSolveResult fixed_curve_class_solve(const NamedClasses& classes, const ClassAnsatz& ansatz,
                                         const RationalVector& targets,
                                         const Rational& quadratic_target) {
  if (targets.size() != ansatz.test_curves.size()) {
    throw std::invalid_argument("one target per test curve required");
  }
  const auto gens = evaluate_generators(classes, ansatz);
  RationalMatrix coeffs(ansatz.test_curves.size(), gens.size());
  for (std::size_t i = 0; i < ansatz.test_curves.size(); ++i) {
    const auto& t = classes.at(ansatz.test_curves[i]);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      coeffs(i, j) = pair(t, gens[j]);
    }
  }
  const RationalMatrix q = ansatz_quadratic_form(classes, ansatz);

  ClassSolveResult r;
  const auto lin = solve_linear_system(coeffs, targets);
  if (!lin.consistent) {
    r.status = SolveStatus::inconsistent;
    return r;
  }
  r.particular = lin.particular;
  if (lin.null_space.size() > 1) {
    r.status = SolveStatus::underdetermined;
    return r;
  }
  r.constant = quadratic_value(q, r.particular, r.particular) - quadratic_target;
  if (lin.null_space.empty()) {
    if (r.constant.is_zero()) {
      r.status = SolveStatus::solved;
      r.solutions.push_back(r.particular);
    } else {
      r.status = SolveStatus::no_rational_solution;
    }
    return r;
  }
  r.direction = lin.null_space.front();
  r.lead = quadratic_value(q, r.direction, r.direction);
  r.linear = Rational(2) * quadratic_value(q, r.particular, r.direction);

  std::vector<Rational> roots;
  if (r.lead.is_zero()) {
    if (r.linear.is_zero()) {
      r.status = r.constant.is_zero() ? SolveStatus::underdetermined
                                      : SolveStatus::no_rational_solution;
      return r;
    }
    roots.push_back(-r.constant / r.linear);
  } else {
    r.discriminant = r.linear * r.linear - Rational(4) * r.lead * r.constant;
    const auto root = rational_is_square(*r.discriminant);
    if (!root) {
      r.status = SolveStatus::no_rational_solution;
      return r;
    }
    const Rational two_a = Rational(2) * r.lead;
    roots.push_back((-r.linear - *root) / two_a);
    if (!root->is_zero()) {
      roots.push_back((-r.linear + *root) / two_a);
    }
    std::sort(roots.begin(), roots.end());
  }
  r.status = SolveStatus::solved;
  for (const auto& t : roots) {
    RationalVector v = r.particular;
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] += t * r.direction[j];
    }
    r.solutions.push_back(std::move(v));
  }
  return r;
}

std::string DiophantineEquation::to_string() const {
  std::string out = (a == 1 ? std::string() : a.get_str()) + "x^2 = ";
  std::string s = "m";
  if (h > 0) {
    s = "(m-" + h.get_str() + ")";
  } else if (h < 0) {
    s = "(m+" + Integer(-h).get_str() + ")";
  }
  out += (c == 1 ? std::string() : c.get_str()) + s + "^2";
  if (k > 0) {
    out += " - " + k.get_str();
  } else if (k < 0) {
    out += " + " + Integer(-k).get_str();
  }
  return out;
}

bool DiophantineEquation::holds(const Integer& x, const Integer& m) const {
  const Integer s = m - h;
  return Integer(a * x * x) == Integer(c * s * s - k);
}

bool DiophantineEquation::forces_integral_x() const {
  if (a == 0) {
    return false;
  }
  for (const auto& [p, e] : factorize(abs(a))) {
    if (e > 1) {
      return false;
    }
  }
  return true;
}

DiophantineEquation reduce_to_diophantine(const NamedClasses& classes, const ClassAnsatz& ansatz,
                                          const Combination& canonical,
                                          const FixedCurveBudget& budget) {
  if (ansatz.generators.size() != 2) {
    throw std::invalid_argument("reduction needs exactly two generators");
  }
  const auto gens = evaluate_generators(classes, ansatz);
  const DivisorClass k = classes.evaluate(canonical);
  const Rational ku = pair(k, gens[0]);
  const Rational kv = pair(k, gens[1]);
  if (kv.is_zero()) {
    throw std::domain_error("canonical class is orthogonal to the second generator");
  }
  const Rational uu = pair(gens[0], gens[0]);
  const Rational uv = pair(gens[0], gens[1]);
  const Rational vv = pair(gens[1], gens[1]);
  // y = (M - ku x) / kv with M = K.A = 2m + offset.
  const Rational x2 = uu - Rational(2) * uv * ku / kv + vv * ku * ku / (kv * kv);
  const Rational xm = Rational(2) * uv / kv - Rational(2) * vv * ku / (kv * kv);
  const Rational m2 = vv / (kv * kv);
  if (!xm.is_zero()) {
    throw std::domain_error("elimination leaves a mixed x*m term");
  }
  const Rational half_offset = budget.ka_offset / Rational(2);
  if (!half_offset.is_integer()) {
    throw std::domain_error("odd canonical offset");
  }
  // M = 2 (m - h) with h = -offset / 2, so -x2 x^2 = 4 m2 (m-h)^2 - sum_a2.
  Rational a = -x2;
  Rational c = Rational(4) * m2;
  Rational kk = budget.sum_a2;
  Integer lcm = 1;
  for (const auto* v : {&a, &c, &kk}) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v->denominator().get_mpz_t());
  }
  Integer ai = (a * Rational(lcm)).to_integer();
  Integer ci = (c * Rational(lcm)).to_integer();
  Integer ki = (kk * Rational(lcm)).to_integer();
  Integer g = 0;
  for (const auto* v : {&ai, &ci, &ki}) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
  }
  if (g == 0) {
    throw std::domain_error("degenerate reduction");
  }
  if (ai < 0 || (ai == 0 && ci < 0)) {
    g = -g;
  }
  return {Integer(ai / g), Integer(ci / g), Integer(-half_offset.to_integer()), Integer(ki / g)};
}

std::string ModularVerdict::certificate() const {
  auto set = [](const std::vector<long>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "}";
  };
  if (solvable) {
    return "solvable mod " + std::to_string(modulus) + " at (x,m)=(" +
           std::to_string(witness->first) + "," + std::to_string(witness->second) + ")";
  }
  return "mod " + std::to_string(modulus) + ": a*x^2+k in " + set(lhs_residues) + ", c*(m-h)^2 in " +
         set(rhs_residues) + ", disjoint";
}

ModularVerdict modular_nonsolvability(const DiophantineEquation& eq, long modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("modulus must be at least 2");
  }
  const Integer n = modulus;
  auto mod = [&](const Integer& v) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return r.get_si();
  };
  ModularVerdict v;
  v.modulus = modulus;
  v.solvable = false;
  std::set<long> lhs;
  std::set<long> rhs;
  for (long x = 0; x < modulus; ++x) {
    lhs.insert(mod(Integer(eq.a * x * x + eq.k)));
  }
  for (long m = 0; m < modulus; ++m) {
    const Integer s = m - eq.h;
    rhs.insert(mod(Integer(eq.c * s * s)));
    for (long x = 0; x < modulus && !v.witness; ++x) {
      if (mod(Integer(eq.a * x * x + eq.k)) == mod(Integer(eq.c * s * s))) {
        v.solvable = true;
        v.witness = std::make_pair(x, m);
      }
    }
  }
  v.lhs_residues.assign(lhs.begin(), lhs.end());
  v.rhs_residues.assign(rhs.begin(), rhs.end());
  return v;
}

std::vector<std::pair<long, long>> brute_force_solutions(const DiophantineEquation& eq, long bound) {
  std::vector<std::pair<long, long>> out;
  for (long x = -bound; x <= bound; ++x) {
    for (long m = -bound; m <= bound; ++m) {
      if (eq.holds(x, m)) {
        out.emplace_back(x, m);
      }
    }
  }
  return out;
}

std::string AffineCount::to_string() const {
  if (per_m == 0) {
    return std::to_string(constant);
  }
  std::string s = (per_m == 1 ? std::string() : std::to_string(per_m)) + "m";
  if (constant > 0) {
    s += "+" + std::to_string(constant);
  } else if (constant < 0) {
    s += std::to_string(constant);
  }
  return s;
}

std::vector<std::pair<Integer, long>> factorize(const Integer& n) {
  if (n < 1) {
    throw std::domain_error("factorize needs a positive integer");
  }
  std::vector<std::pair<Integer, long>> out;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; ++p) {
    long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) {
      out.emplace_back(p, e);
    }
  }
  if (rest > 1) {
    out.emplace_back(rest, 1);
  }
  return out;
}

std::string DeterminantObstruction::expression() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) {
      s += "*";
    }
    const std::string e = f.exponent.to_string();
    s += f.prime.get_str() + "^" + (f.exponent.per_m == 0 ? e : "(" + e + ")");
  }
  return s.empty() ? "1" : s;
}

Integer DeterminantObstruction::evaluate(long m) const {
  Integer v = 1;
  for (const auto& f : factors) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), f.prime.get_mpz_t(), static_cast<unsigned long>(f.exponent.at(m)));
    v *= p;
  }
  return v;
}

std::string DeterminantObstruction::certificate() const {
  if (!witness_prime) {
    return "no parity certificate";
  }
  for (const auto& f : factors) {
    if (f.prime == *witness_prime) {
      return "exponent of " + f.prime.get_str() + " is " + f.exponent.to_string() +
             ", odd for every m";
    }
  }
  return "no parity certificate";
}

DeterminantObstruction nonsquare_determinant_obstruction(const std::vector<DeterminantBlock>& blocks) {
  std::map<Integer, AffineCount> exps;
  for (const auto& b : blocks) {
    const Rational d = determinant(b.gram);
    if (d.is_zero() || !d.is_integer()) {
      throw std::domain_error("block " + b.name + " has determinant " + d.to_string());
    }
    if (b.count.constant < 0 || b.count.per_m < 0) {
      throw std::domain_error("block " + b.name + " has a negative count");
    }
    for (const auto& [p, e] : factorize(d.abs().to_integer())) {
      auto& slot = exps[p];
      slot.constant += e * b.count.constant;
      slot.per_m += e * b.count.per_m;
    }
  }
  DeterminantObstruction out;
  for (const auto& [p, e] : exps) {
    out.factors.push_back({p, e});
    if (!out.witness_prime && e.per_m % 2 == 0 && e.constant % 2 != 0) {
      out.witness_prime = p;
    }
  }
  out.never_square = out.witness_prime.has_value();
  return out;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::determinant:
      return "determinant";
    case Strategy::diophantine:
      return "diophantine";
    case Strategy::class_solve:
      return "class_solve";
  }
  return "?";
}

CaseAnalysis analyse_case(const CaseSpec& spec, const CaseContext& ctx) {
  if (!ctx.classes && spec.strategy != Strategy::determinant) {
    throw std::invalid_argument("case analysis needs the lattice classes");
  }
  CaseAnalysis out;
  out.label = spec.label;
  const auto budget = fixed_curve_budget(spec.trace, spec.h20_sign);
  out.constraints.push_back("trace on NS = " + std::to_string(spec.trace) +
                            ", sign on H^2(O) = " + (spec.h20_sign > 0 ? "+1" : "-1"));
  out.constraints.push_back(budget.to_string());

  switch (spec.strategy) {
    case Strategy::determinant: {
      if (spec.h20_sign != -1) {
        throw std::invalid_argument("determinant strategy needs p_g = 0 on the quotient");
      }
      const auto obs = nonsquare_determinant_obstruction(ctx.determinant_blocks);
      out.constraints.push_back("|det| of curve configuration = " + obs.expression() +
                                " must be 1 on a unimodular lattice");
      out.eliminated = obs.never_square;
      out.outcome = obs.never_square ? "eliminated" : "not eliminated";
      out.certificate = obs.certificate();
      break;
    }
    case Strategy::diophantine: {
      const auto eq = reduce_to_diophantine(*ctx.classes, ctx.reduced_ansatz, ctx.canonical, budget);
      const auto verdict = modular_nonsolvability(eq, ctx.modulus);
      out.constraints.push_back(eq.to_string());
      out.constraints.push_back(eq.forces_integral_x() ? "x integral" : "x not forced integral");
      out.eliminated = eq.forces_integral_x() && !verdict.solvable;
      out.outcome = out.eliminated ? "eliminated" : "not eliminated";
      out.certificate = verdict.certificate();
      break;
    }
    case Strategy::class_solve: {
      bool any_solution = false;
      bool only_zero = true;
      std::string cert;
      for (const auto& targets : ctx.target_branches) {
        const auto r = fixed_curve_class_solve(*ctx.classes, ctx.ansatz, targets, budget.sum_a2);
        if (!cert.empty()) {
          cert += "; ";
        }
        cert += "targets " + surfcalc::to_string(targets) + ": " + to_string(r.status);
        if (r.discriminant) {
          cert += " (discriminant " + r.discriminant->to_string() + ")";
        }
        if (r.status == SolveStatus::underdetermined) {
          any_solution = true;
          only_zero = false;
        }
        if (r.status == SolveStatus::solved) {
          any_solution = true;
          for (const auto& s : r.solutions) {
            cert += " " + surfcalc::to_string(s);
            if (std::any_of(s.begin(), s.end(), [](const Rational& v) { return !v.is_zero(); })) {
              only_zero = false;
            }
          }
        }
      }
      out.certificate = cert;
      if (!any_solution) {
        out.eliminated = true;
        out.outcome = "eliminated";
      } else if (only_zero && budget.sum_a2.is_zero() && budget.ka_offset.is_zero() &&
                 budget.e_fixed == 0) {
        // A = 0 leaves no fixed curves, and then e = 2m forces m = 0.
        out.fixed_point_free = true;
        out.outcome = "admissible only with empty fixed locus (m=0, no fixed curves)";
      } else {
        out.outcome = "not eliminated";
      }
      break;
    }
  }
  return out;
}

}  // namespace surfcalc::lefschetz
