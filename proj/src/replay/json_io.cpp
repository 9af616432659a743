#include "surfcalc/replay/json_io.hpp"

#include <stdexcept>

namespace surfcalc::replay {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Rational(j.get<long long>());
  }
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  throw std::invalid_argument("expected an integer or exact rational string, got " + j.dump());
}

json rational_to_json(const Rational& r) { return r.to_string(); }

Integer integer_from_json(const json& j) {
  const Rational r = rational_from_json(j);
  if (!r.is_integer()) {
    throw std::invalid_argument("expected an integer, got " + r.to_string());
  }
  return r.to_integer();
}

long long_from_json(const json& j) {
  const Integer v = integer_from_json(j);
  if (!v.fits_slong_p()) {
    throw std::invalid_argument("integer out of range: " + v.get_str());
  }
  return v.get_si();
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("matrix must be an array of rows");
  }
  std::vector<RationalVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) {
      throw std::invalid_argument("matrix row must be an array");
    }
    RationalVector r;
    for (const auto& v : row) {
      r.push_back(rational_from_json(v));
    }
    rows.push_back(std::move(r));
  }
  return RationalMatrix::from_rows(rows);
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      row.push_back(rational_to_json(m(i, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(where + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

std::vector<std::string> strings_from_json(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("expected an array of strings, got " + j.dump());
  }
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) {
      throw std::invalid_argument("expected a string, got " + v.dump());
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

LatticePtr lattice_from_json(const json& j) {
  const std::string name = require(j, "name", "lattice").get<std::string>();
  return make_lattice(name, strings_from_json(require(j, "basis", "lattice " + name)),
                      matrix_from_json(require(j, "gram", "lattice " + name)));
}

json lattice_to_json(const IntersectionLattice& l) {
  json j;
  j["name"] = l.name();
  j["basis"] = l.basis();
  j["gram"] = matrix_to_json(l.gram());
  return j;
}

curves::CurveRecord record_from_json(const json& j) {
  curves::CurveRecord r;
  r.label = require(j, "label", "curve record").get<std::string>();
  const std::string where = "curve record " + r.label;
  r.genus = long_from_json(require(j, "genus", where));
  for (const auto& m : require(j, "mults", where)) {
    r.mults.push_back(long_from_json(m));
  }
  if (j.contains("extra_nodes")) {
    r.extra_nodes = long_from_json(j.at("extra_nodes"));
  }
  if (j.contains("sigma_invariant")) {
    r.sigma_invariant = j.at("sigma_invariant").get<bool>();
  }
  return r;
}

quotient::ResolutionPoint point_from_json(const json& j) {
  quotient::ResolutionPoint p;
  p.label = require(j, "label", "point").get<std::string>();
  const auto& t = require(j, "type", "point " + p.label);
  if (!t.is_array() || t.size() != 2) {
    throw std::invalid_argument("point " + p.label + ": type must be [n, a]");
  }
  p.type = {long_from_json(t[0]), long_from_json(t[1])};
  p.exceptional = require(j, "exceptional", "point " + p.label).get<std::string>();
  return p;
}

quotient::CyclicQuotientSetup setup_from_json(const json& j) {
  quotient::CyclicQuotientSetup s;
  s.order = long_from_json(require(j, "order", "quotient setup"));
  for (const auto& p : require(j, "points", "quotient setup")) {
    s.points.push_back(point_from_json(p));
  }
  for (const auto& c : require(j, "curves", "quotient setup")) {
    s.curves.push_back(record_from_json(c));
  }
  s.source = lattice_from_json(require(j, "source", "quotient setup"));
  if (j.contains("suffix")) {
    s.transform_suffix = j.at("suffix").get<std::string>();
  }
  if (j.contains("name")) {
    s.name = j.at("name").get<std::string>();
  }
  return s;
}

quotient::InvolutionSpec involution_from_json(const json& j) {
  quotient::InvolutionSpec spec;
  if (j.contains("swaps")) {
    for (const auto& s : j.at("swaps")) {
      const auto v = strings_from_json(s);
      if (v.size() != 3) {
        throw std::invalid_argument("swap must be [first, second, image]");
      }
      spec.swaps.push_back({v[0], v[1], v[2]});
    }
  }
  if (j.contains("fixed")) {
    for (const auto& f : j.at("fixed")) {
      const auto v = strings_from_json(f);
      if (v.size() != 2) {
        throw std::invalid_argument("fixed curve must be [label, image]");
      }
      spec.fixed.push_back({v[0], v[1]});
    }
  }
  if (j.contains("chain_pairs")) {
    for (const auto& c : j.at("chain_pairs")) {
      spec.chain_orbit_pairs.push_back({strings_from_json(require(c, "first", "chain pair")),
                                        strings_from_json(require(c, "second", "chain pair")),
                                        strings_from_json(require(c, "image", "chain pair"))});
    }
  }
  return spec;
}

}  // namespace surfcalc::replay
