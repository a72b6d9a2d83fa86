#include "critidx/criticality.hpp"

#include <stdexcept>

#include "critidx/bounds.hpp"

namespace critidx {

bool is_unicycle(const Digraph& g) {
  const int n = g.n();
  if (n < 2 || g.edge_count() != n) return false;
  for (int v = 1; v <= n; ++v) {
    if (g.out_neighbors(v).size() != 1 || g.in_neighbors(v).size() != 1) return false;
  }
  Mask seen = 0;
  int v = 1;
  for (int step = 0; step < n; ++step) {
    seen |= Mask{1} << (v - 1);
    v = g.out_neighbors(v).first();
  }
  return v == 1 && NodeSet(seen) == g.nodes();
}

std::optional<NodeSet> find_unicycle_containing(const Digraph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge " + e.str() + " not in graph");
  if (g.n() > kMaxSubsetScanNodes) throw std::invalid_argument("subset scan limited to 20 nodes");
  const Digraph ge = remove_edge(g, e);
  const Mask ends = NodeSet().with(e.from).with(e.to).mask();
  const Mask others = NodeSet::all(g.n()).mask() & ~ends;

  std::optional<NodeSet> best;
  // Walk every subset of the other nodes and add the two endpoints.
  Mask sub = 0;
  do {
    NodeSet s(sub | ends);
    if (!best || s.size() < best->size() || (s.size() == best->size() && s < *best)) {
      if (!is_acyclic_on(g, s) && is_acyclic_on(ge, s)) best = s;
    }
    sub = (sub - others) & others;
  } while (sub != 0);

  if (best && !is_unicycle(compact_subgraph(g, *best))) {
    throw std::logic_error("minimal cycle-breaking set " + best->str() + " is not a unicycle");
  }
  return best;
}

std::vector<Edge> edges_in_unicycles(const Digraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (find_unicycle_containing(g, e)) out.push_back(e);
  }
  return out;
}

std::string to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::Critical: return "Critical";
    case EdgeStatus::NonCritical: return "NonCritical";
    case EdgeStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::UnicycleWitness: return "UnicycleWitness";
    case VerdictReason::NoDirectedCycle: return "NoDirectedCycle";
    case VerdictReason::DegradedSideInfo: return "DegradedSideInfo";
    case VerdictReason::MaisTightAfterRemoval: return "MaisTightAfterRemoval";
    case VerdictReason::Unresolved: return "Unresolved";
  }
  return "?";
}

std::string to_string(GraphStatus s) {
  switch (s) {
    case GraphStatus::Critical: return "Critical";
    case GraphStatus::NotCritical: return "NotCritical";
    case GraphStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

bool TightnessCache::tight(const Digraph& g) {
  if (g.n() > kMaxCanonicalNodes) return mais_tight_via_flcc(g);
  const CanonicalCode key = canonical_code(g);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Computed outside the lock; a racing duplicate computes the same value.
  const bool value = mais_tight_via_flcc(from_code(key));
  std::lock_guard lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

std::size_t TightnessCache::size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

EdgeVerdict classify_edge(const Digraph& g, Edge e, TightnessCache* cache) {
  if (!lies_on_directed_cycle(g, e)) return {EdgeStatus::NonCritical, VerdictReason::NoDirectedCycle, std::nullopt};
  if (!is_nondegraded_edge(g, e)) return {EdgeStatus::NonCritical, VerdictReason::DegradedSideInfo, std::nullopt};
  if (auto s = find_unicycle_containing(g, e)) return {EdgeStatus::Critical, VerdictReason::UnicycleWitness, s};
  const Digraph ge = remove_edge(g, e);
  const bool tight = cache ? cache->tight(ge) : mais_tight_via_flcc(ge);
  if (tight) return {EdgeStatus::NonCritical, VerdictReason::MaisTightAfterRemoval, std::nullopt};
  return {EdgeStatus::Indeterminate, VerdictReason::Unresolved, std::nullopt};
}

GraphVerdict classify_graph(const Digraph& g, TightnessCache* cache) {
  GraphVerdict out;
  out.vacuous = g.edge_count() == 0;
  bool any_noncritical = false;
  bool any_indeterminate = false;
  for (const Edge& e : g.edges()) {
    EdgeVerdict v = classify_edge(g, e, cache);
    any_noncritical |= v.status == EdgeStatus::NonCritical;
    any_indeterminate |= v.status == EdgeStatus::Indeterminate;
    out.per_edge.emplace_back(e, std::move(v));
  }
  out.graph_status = any_noncritical      ? GraphStatus::NotCritical
                     : any_indeterminate ? GraphStatus::Indeterminate
                                         : GraphStatus::Critical;
  return out;
}

Digraph generate_prop4_part1(int n, int i, int j, int k) {
  if (n < 2 || n + 1 > kMaxNodes) throw std::invalid_argument("need 2 <= n < 32");
  if (!(1 <= i && i < j && j <= k && k <= n)) throw std::invalid_argument("need 1 <= i < j <= k <= n");
  std::vector<Edge> edges;
  for (int v = 1; v <= n - 1; ++v) edges.push_back({v + 1, v});
  edges.push_back({1, n});
  const int hub = n + 1;
  edges.push_back({1, hub});
  edges.push_back({hub, i});
  edges.push_back({j, hub});
  edges.push_back({hub, k});
  return Digraph::from_edges(n + 1, edges);
}

Digraph blow_up_cliques(const Digraph& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.n()) throw std::invalid_argument("need one size per node");
  std::vector<int> first(static_cast<std::size_t>(g.n()) + 1, 1);
  int total = 0;
  for (int u = 1; u <= g.n(); ++u) {
    if (sizes[u - 1] < 1) throw std::invalid_argument("blow-up size must be at least 1");
    first[u] = total + 1;
    total += sizes[u - 1];
  }
  if (total > kMaxNodes) throw std::invalid_argument("blown-up graph too large");
  std::vector<Edge> edges;
  for (int u = 1; u <= g.n(); ++u) {
    for (int a = 0; a < sizes[u - 1]; ++a) {
      for (int b = 0; b < sizes[u - 1]; ++b) {
        if (a != b) edges.push_back({first[u] + a, first[u] + b});
      }
    }
  }
  for (const Edge& e : g.edges()) {
    for (int a = 0; a < sizes[e.from - 1]; ++a) {
      for (int b = 0; b < sizes[e.to - 1]; ++b) edges.push_back({first[e.from] + a, first[e.to] + b});
    }
  }
  return Digraph::from_edges(total, edges);
}

}  // namespace critidx
