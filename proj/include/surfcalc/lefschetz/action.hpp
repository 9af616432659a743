#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfcalc/lattice/combination.hpp"
#include "surfcalc/quotient/involution.hpp"

namespace surfcalc::lefschetz {

/// Linear action on a lattice; column j holds the coordinates of the image of
/// basis vector j.
struct ActionMatrix {
  LatticePtr lattice;
  RationalMatrix matrix;

  Rational trace() const;
  DivisorClass apply(const DivisorClass& d) const;
};

/// Action of an involution on the basis of `classes.lattice()`. Each basis
/// label goes to the class named by its partner under `spec`; the partner may
/// be any registered class (e.g. a curve embedded through its pairings) so the
/// basis need not be closed under the permutation. `overrides` replace the
/// image of individual basis labels. Labels absent from `spec` and
/// `overrides` are fixed.
///
/// Throws std::domain_error unless M^T G M = G and M^2 = I.
ActionMatrix build_action(const NamedClasses& classes, const quotient::InvolutionSpec& spec,
                          const std::map<std::string, DivisorClass>& overrides = {});

/// Solving for the image of one curve under an involution that is known on a
/// set of test curves.
///
/// image(curve) = sum over `support` + (component on `residual`). Pairing with
/// each test curve T gives image(curve).T = curve.alpha(T). The residual
/// curves must be orthogonal to the support and test curves and span a
/// negative definite block.
struct CandidateProblem {
  std::string curve;
  std::vector<std::string> support;
  std::vector<std::string> test_curves;
  std::vector<std::string> residual;
  /// Support label whose coefficient is used as the free parameter x.
  std::string parameter;
};

struct CandidateAnalysis {
  /// image = particular + x * direction + Sigma.
  DivisorClass particular;
  DivisorClass direction;
  /// image^2 = lead x^2 + linear x + constant + Sigma^2.
  Rational lead;
  Rational linear;
  Rational constant;
  /// Integral x with Sigma^2 = curve^2 - (lead x^2 + linear x + constant) = 0.
  std::vector<long> parameters;
  std::vector<DivisorClass> candidates;
};

/// Throws std::domain_error if the linear conditions do not leave exactly
/// one free parameter, the residual block is not negative definite, or some
/// integral x would need Sigma^2 < 0 (not decided here).
CandidateAnalysis alpha_candidates(const NamedClasses& classes, const quotient::InvolutionSpec& spec,
                                   const CandidateProblem& problem);

/// True iff the symmetric matrix is negative definite (leading principal
/// minors alternate in sign starting negative).
bool negative_definite(const RationalMatrix& m);

}  // namespace surfcalc::lefschetz
