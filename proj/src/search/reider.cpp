#include "surfcalc/search/reider.hpp"

#include <stdexcept>

namespace surfcalc::search {

std::vector<ReiderCase> reider_cases(int l_squared, ReiderPart part) {
  if (part == ReiderPart::basepoint) {
    if (l_squared < 5) {
      throw std::domain_error("basepoint criterion needs L^2 >= 5, got " +
                              std::to_string(l_squared));
    }
    return {{0, {-1}, false}, {1, {0}, false}};
  }
  if (l_squared < 9) {
    throw std::domain_error("separation criterion needs L^2 >= 9, got " +
                            std::to_string(l_squared));
  }
  std::vector<ReiderCase> out{{0, {-2, -1}, false}, {1, {-1, 0}, false}, {2, {0}, false}};
  if (l_squared == 9) {
    out.push_back({3, {1}, true});
  }
  return out;
}

std::string to_string(const ReiderCase& c) {
  std::string out = "(BL=" + std::to_string(c.bl) + ",B2=";
  for (std::size_t i = 0; i < c.b2_options.size(); ++i) {
    out += (i == 0 ? "" : "|") + std::to_string(c.b2_options[i]);
  }
  if (c.numerically_three_b) {
    out += ",L~3B";
  }
  return out + ")";
}

}  // namespace surfcalc::search
