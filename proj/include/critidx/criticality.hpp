#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "critidx/canonical.hpp"
#include "critidx/digraph.hpp"

namespace critidx {

/// The whole edge set is one Hamiltonian cycle (n >= 2).
bool is_unicycle(const Digraph& g);

/// A node set S with G|_S a unicycle through e, or nullopt. Takes the
/// smallest S (then lexicographically smallest) that is cyclic in G but
/// acyclic once e is removed; such a minimal set always induces a unicycle,
/// which is asserted. Throws std::invalid_argument if e is not an edge.
std::optional<NodeSet> find_unicycle_containing(const Digraph& g, Edge e);

/// Edges that lie on some induced unicycle, in (from, to) order.
std::vector<Edge> edges_in_unicycles(const Digraph& g);

enum class EdgeStatus { Critical, NonCritical, Indeterminate };
enum class VerdictReason { UnicycleWitness, NoDirectedCycle, DegradedSideInfo, MaisTightAfterRemoval, Unresolved };

struct EdgeVerdict {
  EdgeStatus status = EdgeStatus::Indeterminate;
  VerdictReason reason = VerdictReason::Unresolved;
  std::optional<NodeSet> witness;
};

std::string to_string(EdgeStatus s);
std::string to_string(VerdictReason r);

/// Memo of mais_tight_via_flcc keyed by canonical code; safe to share
/// between threads. Only graphs with n <= 8 are cached.
class TightnessCache {
 public:
  bool tight(const Digraph& g);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<CanonicalCode, bool> memo_;
};

/// Decision cascade:
///   1. not on a directed cycle            -> NonCritical(NoDirectedCycle)
///   2. A_i inside A_j                     -> NonCritical(DegradedSideInfo)
///   3. on an induced unicycle             -> Critical(UnicycleWitness)
///   4. MAIS bound of G_e is met by clique
///      covering                           -> NonCritical(MaisTightAfterRemoval)
///   5. otherwise                          -> Indeterminate(Unresolved)
/// Step 4 rests on: no unicycle through e means G and G_e share their MAIS
/// bound, so a tight bound for G_e pins both capacity regions to it.
EdgeVerdict classify_edge(const Digraph& g, Edge e, TightnessCache* cache = nullptr);

enum class GraphStatus { Critical, NotCritical, Indeterminate };
std::string to_string(GraphStatus s);

struct GraphVerdict {
  std::vector<std::pair<Edge, EdgeVerdict>> per_edge;
  GraphStatus graph_status = GraphStatus::Critical;
  /// Edgeless graph: critical only because there is nothing to remove.
  bool vacuous = false;
};

GraphVerdict classify_graph(const Digraph& g, TightnessCache* cache = nullptr);

/// Cycle n -> n-1 -> ... -> 1 -> n plus node n+1 wired by edges
/// 1->n+1, n+1->i, j->n+1, n+1->k. Requires 1 <= i < j <= k <= n.
Digraph generate_prop4_part1(int n, int i, int j, int k);

/// Replaces node u by sizes[u-1] mutually adjacent copies; copy edges follow
/// the edges of G. Copies of node u get consecutive labels, nodes in order.
Digraph blow_up_cliques(const Digraph& g, const std::vector<int>& sizes);

}  // namespace critidx
