#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "surfcalc/exact/matrix.hpp"

namespace surfcalc::curves {

/// Cyclic quotient singularity type 1/n(1,a).
struct QuotientType {
  long order = 0;
  long weight = 0;

  friend bool operator==(const QuotientType&, const QuotientType&) = default;
};

/// Throws std::domain_error unless n >= 2, 1 <= a < n and gcd(a, n) = 1.
void validate(const QuotientType& t);

struct MarkedPoint {
  std::string label;
  QuotientType type;
};

/// A curve through the marked points: geometric genus, multiplicity at each
/// marked point (in point order) and ordinary nodes away from them.
struct CurveRecord {
  std::string label;
  long genus = 0;
  std::vector<long> mults;
  long extra_nodes = 0;
  bool sigma_invariant = true;
};

/// K.E = 3g - 3 for a totally geodesic curve on a ball quotient.
long canonical_degree(const CurveRecord& c);

/// dot(mults1, mults2) + extra_meetings. Throws std::invalid_argument on a
/// multiplicity-length mismatch or when both records carry the same label.
long cross_intersection(const CurveRecord& c1, const CurveRecord& c2, long extra_meetings);

/// 1 - g + sum m_i (m_i - 1) + 2 * extra_nodes.
long self_intersection(const CurveRecord& c);

/// 1 + (D^2 + K.D) / 2.
Rational arithmetic_genus(const Integer& d2, const Integer& kd);

/// g + sum m_i (m_i - 1) / 2 + extra_nodes, i.e. geometric genus plus the
/// delta invariant of ordinary singularities.
long genus_with_singularities(const CurveRecord& c);

/// Transversal meetings away from the marked points, keyed by an unordered
/// label pair.
class ExtraMeetings {
 public:
  void set(const std::string& a, const std::string& b, long count);
  long get(const std::string& a, const std::string& b) const;
  bool contains(const std::string& a, const std::string& b) const;
  const std::map<std::pair<std::string, std::string>, long>& entries() const { return counts_; }

 private:
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b);
  std::map<std::pair<std::string, std::string>, long> counts_;
};

struct TableEntry {
  std::string row;
  std::string col;
  Rational computed;
  Rational expected;

  bool matches() const { return computed == expected; }
};

struct TableReport {
  std::vector<TableEntry> entries;

  std::size_t mismatches() const;
  std::vector<TableEntry> mismatched() const;
};

/// Recomputes the upper triangle (diagonal included) of `expected`, whose rows
/// follow `records`. With `only` non-empty, exactly those (row, col) entries
/// are checked, in the listed order.
TableReport verify_table(const std::vector<CurveRecord>& records, const RationalMatrix& expected,
                         const ExtraMeetings& extras,
                         const std::vector<std::pair<std::string, std::string>>& only = {});

/// Extra meetings and extra nodes that make `expected` consistent with the
/// multiplicity data. Throws std::domain_error on negative or non-integral
/// back-solved counts.
struct BackSolvedExtras {
  ExtraMeetings meetings;
  std::map<std::string, long> nodes;
};
BackSolvedExtras back_solve_extras(const std::vector<CurveRecord>& records,
                                   const RationalMatrix& expected);

/// Ball quotients contain no curves of geometric genus 0 or 1.
/// Throws std::domain_error naming the first offending record.
void validate_ball_quotient(const std::vector<CurveRecord>& records);

}  // namespace surfcalc::curves
