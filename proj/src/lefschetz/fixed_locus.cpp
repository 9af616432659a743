#include "surfcalc/lefschetz/fixed_locus.hpp"

#include <stdexcept>

namespace surfcalc::lefschetz {

namespace {

void check_sign(int s) {
  if (s != 1 && s != -1) {
    throw std::invalid_argument("h20 sign must be +1 or -1");
  }
}

}  // namespace

long topological_constraint(long trace_ns, int h20_sign, long q_terms) {
  check_sign(h20_sign);
  return 2 - q_terms + trace_ns + 2 * h20_sign;
}

void FixedLocusHypothesis::validate() const {
  check_sign(h20_sign);
  if (m < 0) {
    throw std::invalid_argument("negative number of isolated point pairs");
  }
  for (const auto& c : curves) {
    if (c.genus < 0) {
      throw std::invalid_argument("negative genus of a fixed curve");
    }
  }
}

long FixedLocusHypothesis::euler_number() const {
  long e = 2 * m;
  for (const auto& c : curves) {
    e += 2 - 2 * c.genus;
  }
  return e;
}

Rational holomorphic_constraint(const FixedLocusHypothesis& h) {
  h.validate();
  Rational rhs = Rational(h.euler_number()) / Rational(4);
  for (const auto& c : h.curves) {
    rhs += c.self_intersection / Rational(4);
  }
  return Rational(1 + h.h20_sign) - rhs;
}

std::string FixedCurveBudget::to_string() const {
  std::string ka = "2m";
  if (ka_offset.sign() > 0) {
    ka += "+" + ka_offset.to_string();
  } else if (ka_offset.sign() < 0) {
    ka += ka_offset.to_string();
  }
  return "e=" + std::to_string(e_fixed) + ", sum A^2 = " + sum_a2.to_string() +
         ", sum K.A = " + ka;
}

FixedCurveBudget fixed_curve_budget(long trace_ns, int h20_sign, long q_terms) {
  FixedCurveBudget b;
  b.e_fixed = topological_constraint(trace_ns, h20_sign, q_terms);
  // Holomorphic: 1 + sign = e/4 + sum A^2/4.
  b.sum_a2 = Rational(4 * (1 + h20_sign) - b.e_fixed);
  // Adjunction per curve: K.A_i = 2g_i - 2 - A_i^2, and sum (2 - 2g_i) = e - 2m.
  b.ka_offset = -Rational(b.e_fixed) - b.sum_a2;
  return b;
}

}  // namespace surfcalc::lefschetz
