#include "surfcalc/curves/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace surfcalc::curves {

void validate(const QuotientType& t) {
  if (t.order < 2 || t.weight < 1 || t.weight >= t.order || std::gcd(t.order, t.weight) != 1) {
    throw std::domain_error("invalid cyclic quotient type 1/" + std::to_string(t.order) + "(1," +
                            std::to_string(t.weight) + ")");
  }
}

long canonical_degree(const CurveRecord& c) { return 3 * c.genus - 3; }

long cross_intersection(const CurveRecord& c1, const CurveRecord& c2, long extra_meetings) {
  if (c1.label == c2.label) {
    throw std::invalid_argument("cross intersection of " + c1.label + " with itself");
  }
  if (c1.mults.size() != c2.mults.size()) {
    throw std::invalid_argument("multiplicity vectors of " + c1.label + " and " + c2.label +
                                " have different lengths");
  }
  long total = extra_meetings;
  for (std::size_t i = 0; i < c1.mults.size(); ++i) {
    total += c1.mults[i] * c2.mults[i];
  }
  return total;
}

long self_intersection(const CurveRecord& c) {
  long total = 1 - c.genus + 2 * c.extra_nodes;
  for (long m : c.mults) {
    total += m * (m - 1);
  }
  return total;
}

Rational arithmetic_genus(const Integer& d2, const Integer& kd) {
  return Rational(1) + Rational(Integer(d2 + kd), Integer(2));
}

long genus_with_singularities(const CurveRecord& c) {
  long total = c.genus + c.extra_nodes;
  for (long m : c.mults) {
    total += m * (m - 1) / 2;
  }
  return total;
}

std::pair<std::string, std::string> ExtraMeetings::key(const std::string& a,
                                                       const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void ExtraMeetings::set(const std::string& a, const std::string& b, long count) {
  if (a == b) {
    throw std::invalid_argument("extra meetings of " + a + " with itself; use extra_nodes");
  }
  if (count < 0) {
    throw std::domain_error("negative extra meeting count for (" + a + "," + b + ")");
  }
  counts_[key(a, b)] = count;
}

long ExtraMeetings::get(const std::string& a, const std::string& b) const {
  const auto it = counts_.find(key(a, b));
  return it == counts_.end() ? 0 : it->second;
}

bool ExtraMeetings::contains(const std::string& a, const std::string& b) const {
  return counts_.count(key(a, b)) != 0;
}

std::size_t TableReport::mismatches() const { return mismatched().size(); }

std::vector<TableEntry> TableReport::mismatched() const {
  std::vector<TableEntry> out;
  for (const auto& e : entries) {
    if (!e.matches()) {
      out.push_back(e);
    }
  }
  return out;
}

TableReport verify_table(const std::vector<CurveRecord>& records, const RationalMatrix& expected,
                         const ExtraMeetings& extras,
                         const std::vector<std::pair<std::string, std::string>>& only) {
  if (!expected.is_symmetric() || expected.rows() != records.size()) {
    throw std::invalid_argument("expected table must be symmetric with one row per record");
  }
  auto entry = [&](std::size_t i, std::size_t j) -> TableEntry {
    const auto& ri = records[i];
    const auto& rj = records[j];
    const long computed =
        i == j ? self_intersection(ri) : cross_intersection(ri, rj, extras.get(ri.label, rj.label));
    return {ri.label, rj.label, Rational(computed), expected(i, j)};
  };
  auto index = [&](const std::string& label) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].label == label) {
        return i;
      }
    }
    throw std::invalid_argument("no curve record " + label);
  };
  TableReport report;
  if (!only.empty()) {
    for (const auto& [a, b] : only) {
      report.entries.push_back(entry(index(a), index(b)));
    }
    return report;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t j = i; j < records.size(); ++j) {
      report.entries.push_back(entry(i, j));
    }
  }
  return report;
}

BackSolvedExtras back_solve_extras(const std::vector<CurveRecord>& records,
                                   const RationalMatrix& expected) {
  if (!expected.is_symmetric() || expected.rows() != records.size()) {
    throw std::invalid_argument("expected table must be symmetric with one row per record");
  }
  BackSolvedExtras out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    CurveRecord smooth = records[i];
    smooth.extra_nodes = 0;
    const Rational node_excess = (expected(i, i) - Rational(self_intersection(smooth))) / 2;
    if (!node_excess.is_integer() || node_excess.sign() < 0) {
      throw std::domain_error("self-intersection of " + records[i].label +
                              " is not reachable by adding ordinary nodes");
    }
    out.nodes[records[i].label] = node_excess.to_integer().get_si();
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      const Rational extra = expected(i, j) - Rational(cross_intersection(records[i], records[j], 0));
      if (!extra.is_integer() || extra.sign() < 0) {
        throw std::domain_error("intersection of " + records[i].label + " and " +
                                records[j].label + " is below the marked-point contribution");
      }
      out.meetings.set(records[i].label, records[j].label, extra.to_integer().get_si());
    }
  }
  return out;
}

void validate_ball_quotient(const std::vector<CurveRecord>& records) {
  for (const auto& r : records) {
    if (r.genus <= 1) {
      throw std::domain_error("curve " + r.label + " has geometric genus " +
                              std::to_string(r.genus) +
                              "; a ball quotient carries no curves of genus 0 or 1");
    }
  }
}

}  // namespace surfcalc::curves
