#pragma once

#include <map>
#include <optional>
#include <vector>

#include "critidx/digraph.hpp"
#include "critidx/lp.hpp"
#include "critidx/rational.hpp"
#include "critidx/region.hpp"

namespace critidx {

inline constexpr int kMaxSubsetScanNodes = 20;

/// Outer bound from acyclic induced subgraphs.
struct MaisBound {
  RateRegion region;
  /// Size of the largest acyclic induced vertex set.
  int mais_number = 0;
};

/// Clique weights certifying an inner-bound rate tuple.
using RhoAssignment = std::map<NodeSet, Rational>;

/// Inclusion-maximal S with G|_S acyclic, lexicographic order. Subset scan;
/// throws std::invalid_argument for n > 20.
std::vector<NodeSet> maximal_acyclic_sets(const Digraph& g);

MaisBound mais_region(const Digraph& g);

/// Load and coverage rows over one variable per clique, in the order of
/// `cliques(g)`:
///   for every receiver j: sum of weights of cliques not inside A_j <= 1
///   for every receiver j: sum of weights of cliques containing j >= R_j
///   every weight <= 1
LPProblem flcc_problem(const Digraph& g, const RateTuple& r);

/// True iff `rho` (keyed by cliques of g) meets the load and coverage rows
/// for R and every weight lies in [0, 1].
bool flcc_certifies(const Digraph& g, const RateTuple& r, const RhoAssignment& rho);

struct FlccResult {
  bool achievable = false;
  /// Nonzero weights only; present iff achievable.
  std::optional<RhoAssignment> witness;
};

/// Fractional local clique covering inner bound. Throws on dimension
/// mismatch or negative rates.
FlccResult flcc_achievable(const Digraph& g, const RateTuple& r);

/// Minimal (size, then lexicographic) S acyclic in G_e yet cyclic in G, or
/// nullopt. The verdict is taken from comparing the two MAIS regions and
/// cross-checked against the subset scan; disagreement throws
/// std::logic_error.
std::optional<NodeSet> mais_shrinks_on_removal(const Digraph& g, Edge e);

struct TightnessReport {
  bool tight = true;
  int vertices_checked = 0;
  /// First MAIS vertex the inner bound misses.
  std::optional<RateTuple> counterexample;
};

/// Checks every vertex of the MAIS region against the clique-covering
/// inner bound. Tight means the inner and outer bounds coincide, hence both
/// equal the capacity region.
TightnessReport mais_tightness(const Digraph& g);
bool mais_tight_via_flcc(const Digraph& g);

struct SymmetricBounds {
  Rational lower;
  Rational upper;
};

/// upper = 1 / mais_number; lower = largest R with (R,...,R) in the inner
/// bound. For n = 0 both are 0.
SymmetricBounds symmetric_bounds(const Digraph& g);

}  // namespace critidx
