#include "surfcalc/exact/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace surfcalc {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string owned(text);
  if (owned.front() == '+') {
    owned.erase(0, 1);
  }
  return Integer(owned, 10);
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(body, text));
  }
  const Integer num = parse_integer(trim(body.substr(0, slash)), text);
  const std::string_view den_text = trim(body.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  return Rational(num, parse_integer(den_text, text));
}

Integer Rational::to_integer() const {
  if (!is_integer()) {
    throw std::domain_error("not an integer: " + to_string());
  }
  return value_.get_num();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational out;
  out.value_ = -value_;
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace surfcalc
