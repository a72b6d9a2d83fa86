#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critidx/digraph.hpp"
#include "critidx/rational.hpp"

namespace critidx {

/// One rate per receiver, receiver j at index j-1.
using RateTuple = std::vector<Rational>;

/// Parses "p/q,p/q,..." into a tuple. Throws std::invalid_argument on a
/// malformed or negative entry.
RateTuple parse_rate_tuple(const std::string& text);
std::string format_rate_tuple(const RateTuple& r);

inline constexpr int kMaxVertexNodes = 8;

/// {R >= 0 : sum_{j in S} R_j <= 1 for every S in the family}.
///
/// The family is stored antichain-reduced: a constraint on S implies the
/// constraint on every subset of S, so only inclusion-maximal sets are kept.
/// Empty sets carry no constraint and are dropped.
class RateRegion {
 public:
  RateRegion() = default;
  RateRegion(int n, std::vector<NodeSet> constraint_sets);

  int n() const { return n_; }
  /// Maximal constraint sets in lexicographic member order.
  const std::vector<NodeSet>& constraint_sets() const { return sets_; }

  /// True iff R >= 0 and every constraint holds. Throws on dimension mismatch.
  bool contains(const RateTuple& r) const;

  /// {"n": n, "constraints": [[1], [2, 3]]}
  std::string to_json() const;
  static RateRegion from_json(const std::string& text);

  friend bool operator==(const RateRegion&, const RateRegion&) = default;

 private:
  int n_ = 0;
  std::vector<NodeSet> sets_;
};

bool region_contains(const RateRegion& region, const RateTuple& r);

/// A strictly inside B as point sets, decided on the constraint families:
/// A is inside B iff each set of B lies within some set of A. Valid because
/// every constraint has unit coefficients and right-hand side 1.
bool region_proper_subset(const RateRegion& a, const RateRegion& b);
bool region_subset(const RateRegion& a, const RateRegion& b);

/// All extreme points, exact and deduplicated, in lexicographic coordinate
/// order. Throws std::invalid_argument for n > 8.
///
/// Candidate points solve n tight hyperplanes drawn from the region
/// constraints and the coordinate planes. Candidates are grouped by support
/// T: coordinates outside T sit on their planes, and on T only the maximal
/// restrictions S & T can be tight at a point positive on T, so only those
/// are combined.
std::vector<RateTuple> region_vertices(const RateRegion& region);

/// Exact solve of a square system; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace critidx
