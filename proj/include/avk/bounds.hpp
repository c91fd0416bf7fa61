#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "avk/rational.hpp"

namespace avk {

/* Flat bag of named exact numbers plus named integer tables (Betti rows).
   Missing fields are reported with the name of the calculation asking. */
class InvariantBundle {
 public:
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  Rational get(const std::string& key, const std::string& context) const;
  Rational get_or(const std::string& key, const Rational& fallback) const;
  void set(const std::string& key, const Rational& v) { values_[key] = v; }

  bool has_table(const std::string& key) const { return tables_.count(key) != 0; }
  // Entries past the end of a table are zero.
  Rational table(const std::string& key, long index, const std::string& context) const;
  const std::vector<Rational>& table(const std::string& key, const std::string& context) const;
  void set_table(const std::string& key, std::vector<Rational> v) { tables_[key] = std::move(v); }

  const std::map<std::string, Rational>& values() const { return values_; }
  const std::map<std::string, std::vector<Rational>>& tables() const { return tables_; }

  // Fills derived fields (kappa signs from n, frak_p, plane data when cp2 = 1,
  // oval totals) and rejects supplied values that disagree with them.
  InvariantBundle completed() const;

 private:
  std::map<std::string, Rational> values_;
  std::map<std::string, std::vector<Rational>> tables_;
};

enum class RowKind { Bound, Identity, Bookkeeping };

struct BoundRow {
  std::string id;
  std::string statement;       // human-readable inequality
  RowKind kind = RowKind::Bound;
  std::optional<Rational> lhs;  // absent when the caller gave no left-hand side
  Rational rhs;
  std::optional<Rational> slack() const;
  std::string verdict() const;  // "ok", "violated", "rhs-only", "info"
};

struct BoundsReport {
  std::string family;
  std::vector<BoundRow> rows;
  std::vector<std::string> notes;
  bool all_ok() const;
};

struct Interval {
  Rational lower, upper;
};
Interval petrovskii_classic(long k);

struct DoublePlaneBetti {
  Rational b2_plus, b2_minus, p_g;
};
DoublePlaneBetti double_plane_betti(long k);

const std::vector<std::string>& arnold_viro_variants();
BoundsReport arnold_viro_rhs(const std::string& variant, const InvariantBundle& iv);
BoundsReport smith_rhs(const InvariantBundle& iv);
BoundsReport hodge_identities(const InvariantBundle& iv);
BoundsReport petrovskii_general(const InvariantBundle& iv);
BoundsReport cuspidal_bounds(const InvariantBundle& iv);

// Prediction for the partition form of m generic lines; σ₀ equals the count
// of regions meeting one fixed line.
Rational arrangement_nullity_bound(long m, long d);

}  // namespace avk
