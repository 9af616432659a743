#include "surfcalc/quotient/hj_chain.hpp"

#include <stdexcept>

namespace surfcalc::quotient {

RationalMatrix HJChain::gram() const {
  const std::size_t r = self_intersections.size();
  RationalMatrix g(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    g(i, i) = self_intersections[i];
    if (i + 1 < r) {
      g(i, i + 1) = 1;
      g(i + 1, i) = 1;
    }
  }
  return g;
}

HJChain hj_chain(long n, long a) {
  curves::validate({n, a});
  HJChain chain{{n, a}, {}};
  long num = n;
  long den = a;
  while (den != 0) {
    const long c = (num + den - 1) / den;  // ceil(num / den)
    chain.self_intersections.push_back(-c);
    const long rest = c * den - num;
    num = den;
    den = rest;
  }
  return chain;
}

Rational continued_fraction_value(const std::vector<long>& self_intersections) {
  if (self_intersections.empty()) {
    throw std::invalid_argument("empty chain");
  }
  Rational value = -self_intersections.back();
  for (auto it = self_intersections.rbegin() + 1; it != self_intersections.rend(); ++it) {
    value = Rational(-*it) - Rational(1) / value;
  }
  return value;
}

}  // namespace surfcalc::quotient
