#include "surfcalc/lattice/combination.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace surfcalc {

namespace {

bool is_label_start(char ch) {
  return std::isalpha(static_cast<unsigned char>(ch)) != 0 || ch == '_';
}

bool is_label_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_' || ch == '\'';
}

void accumulate(Combination& into, const std::string& label, const Rational& coefficient) {
  for (auto it = into.begin(); it != into.end(); ++it) {
    if (it->label == label) {
      it->coefficient += coefficient;
      if (it->coefficient.is_zero()) {
        into.erase(it);
      }
      return;
    }
  }
  if (!coefficient.is_zero()) {
    into.push_back({label, coefficient});
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Combination parse() {
    Combination out = expression();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return out;
  }

 private:
  Combination expression() {
    Combination out;
    skip_space();
    Rational sign = 1;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    for (;;) {
      for (const auto& t : term()) {
        accumulate(out, t.label, sign * t.coefficient);
      }
      skip_space();
      if (peek('+')) {
        ++pos_;
        sign = 1;
      } else if (peek('-')) {
        ++pos_;
        sign = -1;
      } else {
        return out;
      }
    }
  }

  Combination term() {
    skip_space();
    Rational coefficient = 1;
    bool had_number = false;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coefficient = number();
      had_number = true;
      skip_space();
      if (peek('/')) {
        ++pos_;
        skip_space();
        const Rational den = number();
        if (den.is_zero()) {
          fail("zero denominator");
        }
        coefficient /= den;
      }
      skip_space();
      if (peek('*')) {
        ++pos_;
        skip_space();
      }
    }
    if (peek('(')) {
      ++pos_;
      Combination inner = expression();
      skip_space();
      if (!peek(')')) {
        fail("missing ')'");
      }
      ++pos_;
      return scale(inner, coefficient);
    }
    if (pos_ < text_.size() && is_label_start(text_[pos_])) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_label_char(text_[pos_])) {
        ++pos_;
      }
      Combination single;
      accumulate(single, std::string(text_.substr(start, pos_ - start)), coefficient);
      return single;
    }
    if (had_number && coefficient.is_zero()) {
      return {};
    }
    fail(had_number ? "constant term without a curve label" : "expected a term");
    return {};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a number");
    }
    return Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10));
  }

  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse combination '" + std::string(text_) + "' at " +
                                std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Combination parse_combination(std::string_view text) { return Parser(text).parse(); }

std::string format_combination(const Combination& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coefficient.is_zero()) {
      continue;
    }
    const Rational mag = t.coefficient.abs();
    if (t.coefficient.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (mag != Rational(1)) {
      out += mag.to_string() + "*";
    }
    out += t.label;
  }
  return out.empty() ? "0" : out;
}

Combination scale(const Combination& terms, const Rational& s) {
  Combination out;
  for (const auto& t : terms) {
    accumulate(out, t.label, s * t.coefficient);
  }
  return out;
}

Combination add(const Combination& a, const Combination& b) {
  Combination out = a;
  for (const auto& t : b) {
    accumulate(out, t.label, t.coefficient);
  }
  return out;
}

NamedClasses::NamedClasses(LatticePtr lattice) : lattice_(std::move(lattice)) {
  for (const auto& label : lattice_->basis()) {
    define(label, DivisorClass::basis_vector(lattice_, label));
  }
}

bool NamedClasses::contains(std::string_view label) const {
  return classes_.find(label) != classes_.end();
}

const DivisorClass& NamedClasses::at(std::string_view label) const {
  const auto it = classes_.find(label);
  if (it == classes_.end()) {
    throw std::invalid_argument("no class named '" + std::string(label) + "' on lattice '" +
                                lattice_->name() + "'");
  }
  return it->second;
}

const DivisorClass& NamedClasses::embed_by_pairings(std::string label,
                                                    std::span<const Rational> pairings) {
  return define(std::move(label), coords_from_pairings(lattice_, pairings));
}

const DivisorClass& NamedClasses::define(std::string label, DivisorClass d) {
  if (contains(label)) {
    throw std::invalid_argument("class '" + label + "' already registered on lattice '" +
                                lattice_->name() + "'");
  }
  if (!d.lattice()->same_as(*lattice_)) {
    throw std::invalid_argument("class '" + label + "' lives on lattice '" +
                                d.lattice()->name() + "', not '" + lattice_->name() + "'");
  }
  order_.push_back(label);
  return classes_.emplace(std::move(label), std::move(d)).first->second;
}

DivisorClass NamedClasses::evaluate(const Combination& terms) const {
  DivisorClass out = DivisorClass::zero(lattice_);
  for (const auto& t : terms) {
    out += t.coefficient * at(t.label);
  }
  return out;
}

DivisorClass NamedClasses::evaluate(std::string_view expression) const {
  return evaluate(parse_combination(expression));
}

}  // namespace surfcalc
