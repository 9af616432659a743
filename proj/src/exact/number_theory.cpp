#include "surfcalc/exact/number_theory.hpp"

#include <stdexcept>

namespace surfcalc {

Integer isqrt(const Integer& n) {
  if (n < 0) {
    throw std::domain_error("square root of negative integer " + n.get_str());
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

std::optional<Integer> is_perfect_square(const Integer& n) {
  if (n < 0) {
    throw std::domain_error("perfect-square test on negative integer " + n.get_str());
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return isqrt(n);
}

std::optional<Rational> rational_is_square(const Rational& q) {
  if (q.sign() < 0) {
    return std::nullopt;
  }
  const auto num = is_perfect_square(q.numerator());
  const auto den = is_perfect_square(q.denominator());
  if (!num || !den) {
    return std::nullopt;
  }
  return Rational(*num, *den);
}

std::vector<std::pair<Integer, Integer>> two_square_representations(const Integer& n) {
  if (n < 0) {
    return {};
  }
  std::vector<std::pair<Integer, Integer>> out;
  const Integer bound = isqrt(n);
  for (Integer u = 0; u <= bound; ++u) {
    const Integer rest = n - u * u;
    if (auto s = is_perfect_square(rest)) {
      out.emplace_back(u, *s);
    }
  }
  return out;
}

}  // namespace surfcalc
