#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace critidx {

/// Largest node count a Digraph can hold. Exhaustive routines impose their
/// own, much smaller, limits.
inline constexpr int kMaxNodes = 32;

using Mask = std::uint32_t;

/// Subset of [1..n] stored as a bit mask (bit j-1 is node j).
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(Mask mask) : mask_(mask) {}
  static NodeSet of(std::initializer_list<int> nodes);
  static NodeSet from_vector(const std::vector<int>& nodes);
  static constexpr NodeSet all(int n) {
    return NodeSet(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int node) const { return (mask_ >> (node - 1)) & 1u; }
  constexpr bool subset_of(NodeSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool proper_subset_of(NodeSet other) const { return subset_of(other) && mask_ != other.mask_; }

  constexpr NodeSet with(int node) const { return NodeSet(mask_ | (Mask{1} << (node - 1))); }
  constexpr NodeSet without(int node) const { return NodeSet(mask_ & ~(Mask{1} << (node - 1))); }
  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(mask_ | o.mask_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(mask_ & o.mask_); }

  /// Members in ascending order, 1-based.
  std::vector<int> members() const;
  /// Smallest member; undefined on the empty set.
  int first() const { return std::countr_zero(mask_) + 1; }

  friend constexpr bool operator==(NodeSet, NodeSet) = default;
  /// Lexicographic order on the ascending member lists ({1} < {1,2} < {2}).
  friend std::strong_ordering operator<=>(NodeSet a, NodeSet b);

  std::string str() const;  // "{1,2}"

 private:
  Mask mask_ = 0;
};

struct Edge {
  int from = 0;
  int to = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
  std::string str() const;  // "1->2"
};

/// Directed side-information graph on nodes 1..n. Edge i->j is present iff
/// receiver j holds message i, i.e. i is in A_j.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  /// Throws std::invalid_argument on self-loops, out-of-range labels, or
  /// duplicate edges.
  static Digraph from_edges(int n, const std::vector<Edge>& edges);
  /// A[j-1] is the side information set of receiver j.
  static Digraph from_side_info(int n, const std::vector<NodeSet>& side_info);
  static Digraph from_side_info(int n, const std::vector<std::vector<int>>& side_info);

  int n() const { return n_; }
  NodeSet nodes() const { return NodeSet::all(n_); }

  bool has_edge(int from, int to) const { return (out_[from - 1] >> (to - 1)) & 1u; }
  bool has_edge(Edge e) const { return has_edge(e.from, e.to); }
  NodeSet out_neighbors(int node) const { return NodeSet(out_[node - 1]); }
  NodeSet in_neighbors(int node) const { return NodeSet(in_[node - 1]); }
  /// A_j, the in-neighbourhood of j.
  NodeSet side_info(int node) const { return in_neighbors(node); }
  std::vector<NodeSet> side_info_sets() const;

  int edge_count() const;
  /// Edges in (from, to) lexicographic order.
  std::vector<Edge> edges() const;

  /// Returns a copy with e added. Throws if e is already present or invalid.
  Digraph with_edge(Edge e) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_node(int node) const;

  int n_ = 0;
  std::vector<Mask> out_;
  std::vector<Mask> in_;
};

/// Subgraph on the members of S, keeping original labels (nodes outside S
/// become isolated).
Digraph induced_subgraph(const Digraph& g, NodeSet s);

/// Subgraph on the members of S, relabelled 1..|S| in ascending order.
Digraph compact_subgraph(const Digraph& g, NodeSet s);

bool is_acyclic(const Digraph& g);
/// Acyclicity of G|_S straight from the masks, no copy.
bool is_acyclic_on(const Digraph& g, NodeSet s);

/// Nodes reachable from `from` by a directed path of length >= 0.
NodeSet reachable_from(const Digraph& g, int from);

bool lies_on_directed_cycle(const Digraph& g, Edge e);
bool is_strongly_connected(const Digraph& g);
/// A_i not a subset of A_j for edge i->j.
bool is_nondegraded_edge(const Digraph& g, Edge e);

bool is_clique(const Digraph& g, NodeSet s);
/// All nonempty bidirectionally complete node sets, singletons included, in
/// lexicographic member order.
std::vector<NodeSet> cliques(const Digraph& g);

Digraph remove_edge(const Digraph& g, Edge e);

/// Relabels node v to perm[v-1] (perm is a permutation of 1..n).
Digraph relabel(const Digraph& g, const std::vector<int>& perm);

}  // namespace critidx
