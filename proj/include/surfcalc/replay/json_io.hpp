#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "surfcalc/curves/curve.hpp"
#include "surfcalc/lattice/lattice.hpp"
#include "surfcalc/quotient/involution.hpp"
#include "surfcalc/quotient/resolution.hpp"

namespace surfcalc::replay {

using nlohmann::json;

/// Integers may be bare numbers; anything else must be an exact string such
/// as "8/9". Floating-point numbers are rejected.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

Integer integer_from_json(const json& j);
long long_from_json(const json& j);

RationalMatrix matrix_from_json(const json& j);
json matrix_to_json(const RationalMatrix& m);

/// {"name", "basis", "gram"}.
LatticePtr lattice_from_json(const json& j);
json lattice_to_json(const IntersectionLattice& l);

/// {"label", "genus", "mults", "extra_nodes"?, "sigma_invariant"?}.
curves::CurveRecord record_from_json(const json& j);

/// {"label", "type": [n, a], "exceptional"}.
quotient::ResolutionPoint point_from_json(const json& j);

/// Standalone quotient setup: {"order", "points", "curves", "source": lattice
/// object, "suffix"?, "name"?}.
quotient::CyclicQuotientSetup setup_from_json(const json& j);

/// {"swaps": [[a, b, image]], "fixed": [[a, image]],
///  "chain_pairs": [{"first", "second", "image"}]}.
quotient::InvolutionSpec involution_from_json(const json& j);

std::vector<std::string> strings_from_json(const json& j);

/// Required member access with a readable error naming `where`.
const json& require(const json& j, const std::string& key, const std::string& where);

}  // namespace surfcalc::replay
