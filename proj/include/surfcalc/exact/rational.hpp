#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace surfcalc {

using Integer = mpz_class;

/// Exact fraction over arbitrary-precision integers.
///
/// Values are always held in lowest terms with a positive denominator, so
/// two rationals are equal exactly when their numerators and denominators
/// are equal.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT

  Rational(const Integer& value) : value_(value) {}  // NOLINT

  /// Throws std::domain_error when `denominator` is zero.
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses "p", "-p" or "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  /// The numerator when `is_integer()`, otherwise std::domain_error.
  Integer to_integer() const;

  Rational abs() const;
  Integer floor() const;
  Integer ceil() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.to_string();
  }

 private:
  mpq_class value_;
};

using RationalVector = std::vector<Rational>;

std::string to_string(const Integer& n);

/// "(a,b,c)" rendering used in reports.
std::string to_string(const RationalVector& v);

}  // namespace surfcalc
