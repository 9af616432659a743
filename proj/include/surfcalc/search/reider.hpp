#pragma once

#include <string>
#include <vector>

namespace surfcalc::search {

enum class ReiderPart { basepoint, separation };

/// One exceptional numerical class (B.L, B^2) along which |K+L| may fail
/// to be base point free (basepoint part) or to separate points.
struct ReiderCase {
  int bl = 0;
  std::vector<int> b2_options;
  /// The case L^2 = 9 with L numerically 3B (so B.L = 3, B^2 = 1).
  bool numerically_three_b = false;

  friend bool operator==(const ReiderCase&, const ReiderCase&) = default;
};

/// The literal case table. Throws std::domain_error when L^2 is below the
/// threshold of the requested part (5 for basepoint, 9 for separation).
std::vector<ReiderCase> reider_cases(int l_squared, ReiderPart part);

std::string to_string(const ReiderCase& c);

}  // namespace surfcalc::search
