#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfcalc/lattice/combination.hpp"
#include "surfcalc/lefschetz/fixed_locus.hpp"

namespace surfcalc::lefschetz {

/// A = sum_i variables[i] * generators[i], constrained by the pairings of A
/// with each test curve.
struct ClassAnsatz {
  std::vector<std::string> variables;
  std::vector<Combination> generators;
  std::vector<std::string> test_curves;
};

/// Gram matrix of the generators: A^2 = v^T Q v.
RationalMatrix ansatz_quadratic_form(const NamedClasses& classes, const ClassAnsatz& ansatz);

enum class SolveStatus { solved, no_rational_solution, underdetermined, inconsistent };

std::string to_string(SolveStatus s);

struct ClassSolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  /// All rational solutions when `solved`.
  std::vector<RationalVector> solutions;
  /// Linear reduction: particular + t * direction (direction empty if unique).
  RationalVector particular;
  RationalVector direction;
  /// A^2 - target along the line, as lead t^2 + linear t + constant.
  Rational lead;
  Rational linear;
  Rational constant;
  /// linear^2 - 4 lead constant, when the restriction is a genuine quadratic.
  std::optional<Rational> discriminant;
};

/// Reduces the linear system (test_i . A = targets[i]), substitutes into A^2
/// and classifies the rational solutions of A^2 = quadratic_target.
ClassSolveResult fixed_curve_class_solve(const NamedClasses& classes, const ClassAnsatz& ansatz,
                                         const RationalVector& targets,
                                         const Rational& quadratic_target);

/// a x^2 = c (m - h)^2 - k over the integers.
struct DiophantineEquation {
  Integer a;
  Integer c;
  Integer h;
  Integer k;

  /// "2x^2 = (m-4)^2 - 3".
  std::string to_string() const;
  bool holds(const Integer& x, const Integer& m) const;
  /// True when a is squarefree: a rational x with a x^2 integral is then an
  /// integer.
  bool forces_integral_x() const;

  friend bool operator==(const DiophantineEquation&, const DiophantineEquation&) = default;
};

/// Eliminates y from A = x u + y v using K.A = 2m + ka_offset and returns
/// A^2 = sum_a2 as a normalised equation in (x, m). The ansatz must have
/// exactly two generators. Throws std::domain_error when the elimination
/// leaves an x*m cross term, K.v = 0, or the offset is odd.
DiophantineEquation reduce_to_diophantine(const NamedClasses& classes, const ClassAnsatz& ansatz,
                                          const Combination& canonical,
                                          const FixedCurveBudget& budget);

struct ModularVerdict {
  long modulus = 0;
  bool solvable = true;
  /// Residue pair (x, m) solving the congruence, when one exists.
  std::optional<std::pair<long, long>> witness;
  /// Residues of a x^2 + k and of c s^2 (s = m - h) modulo the modulus.
  std::vector<long> lhs_residues;
  std::vector<long> rhs_residues;

  std::string certificate() const;
};

/// Enumerates all residue pairs (x, m) mod `modulus`. No solution mod N
/// proves there is no integer solution. Throws std::invalid_argument for
/// modulus < 2.
ModularVerdict modular_nonsolvability(const DiophantineEquation& eq, long modulus = 9);

/// Integer solutions with |x|, |m| <= bound.
std::vector<std::pair<long, long>> brute_force_solutions(const DiophantineEquation& eq, long bound);

/// constant + per_m * m for a symbolic m >= 0.
struct AffineCount {
  long constant = 0;
  long per_m = 0;

  long at(long m) const { return constant + per_m * m; }
  std::string to_string() const;
};

/// An orthogonal block of an intersection matrix occurring `count` times.
struct DeterminantBlock {
  std::string name;
  RationalMatrix gram;
  AffineCount count;
};

struct PrimeExponent {
  Integer prime;
  AffineCount exponent;
};

struct DeterminantObstruction {
  /// |det| = prod prime^exponent(m).
  std::vector<PrimeExponent> factors;
  bool never_square = false;
  /// A prime whose exponent is odd for every m >= 0.
  std::optional<Integer> witness_prime;

  /// "2^(2m+3)*3^3".
  std::string expression() const;
  Integer evaluate(long m) const;
  std::string certificate() const;
};

/// Factors |det| of a block-diagonal matrix with symbolic block counts.
/// Throws std::domain_error on a block whose determinant is zero or not an
/// integer.
DeterminantObstruction nonsquare_determinant_obstruction(const std::vector<DeterminantBlock>& blocks);

/// Positive prime factorisation by trial division. Throws on n < 1.
std::vector<std::pair<Integer, long>> factorize(const Integer& n);

enum class Strategy { determinant, diophantine, class_solve };

std::string to_string(Strategy s);

/// One branch of the fixed-locus analysis: trace of the involution on NS and
/// its sign on H^2(O).
struct CaseSpec {
  std::string label;
  long trace = 0;
  int h20_sign = -1;
  Strategy strategy = Strategy::class_solve;
};

struct CaseContext {
  const NamedClasses* classes = nullptr;
  /// class_solve: invariant fixed-curve ansatz and the target branches.
  ClassAnsatz ansatz;
  std::vector<RationalVector> target_branches;
  /// diophantine: two-generator ansatz and the canonical class.
  ClassAnsatz reduced_ansatz;
  Combination canonical;
  /// determinant: intersection blocks on the quotient.
  std::vector<DeterminantBlock> determinant_blocks;
  long modulus = 9;
};

struct CaseAnalysis {
  std::string label;
  std::vector<std::string> constraints;
  std::string outcome;
  std::string certificate;
  bool eliminated = false;
  /// Set when the only admissible fixed locus is empty.
  bool fixed_point_free = false;
};

CaseAnalysis analyse_case(const CaseSpec& spec, const CaseContext& ctx);

}  // namespace surfcalc::lefschetz
