#include "critidx/digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace critidx {

NodeSet NodeSet::of(std::initializer_list<int> nodes) {
  NodeSet s;
  for (int v : nodes) {
    if (v < 1 || v > kMaxNodes) throw std::invalid_argument("node label out of range");
    s = s.with(v);
  }
  return s;
}

NodeSet NodeSet::from_vector(const std::vector<int>& nodes) {
  NodeSet s;
  for (int v : nodes) {
    if (v < 1 || v > kMaxNodes) throw std::invalid_argument("node label out of range");
    s = s.with(v);
  }
  return s;
}

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering operator<=>(NodeSet a, NodeSet b) {
  Mask x = a.mask_;
  Mask y = b.mask_;
  while (x != 0 && y != 0) {
    int fx = std::countr_zero(x);
    int fy = std::countr_zero(y);
    if (fx != fy) return fx <=> fy;
    x &= x - 1;
    y &= y - 1;
  }
  // A proper prefix sorts first.
  return (x != 0) <=> (y != 0);
}

std::string NodeSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string Edge::str() const { return std::to_string(from) + "->" + std::to_string(to); }

Digraph::Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxNodes) throw std::invalid_argument("node count out of range");
}

void Digraph::check_node(int node) const {
  if (node < 1 || node > n_) {
    throw std::invalid_argument("node " + std::to_string(node) + " outside [1.." + std::to_string(n_) + "]");
  }
}

Digraph Digraph::from_edges(int n, const std::vector<Edge>& edges) {
  Digraph g(n);
  for (const Edge& e : edges) {
    g.check_node(e.from);
    g.check_node(e.to);
    if (e.from == e.to) throw std::invalid_argument("self-loop at node " + std::to_string(e.from));
    if (g.has_edge(e)) throw std::invalid_argument("duplicate edge " + e.str());
    g.out_[e.from - 1] |= Mask{1} << (e.to - 1);
    g.in_[e.to - 1] |= Mask{1} << (e.from - 1);
  }
  return g;
}

Digraph Digraph::from_side_info(int n, const std::vector<NodeSet>& side_info) {
  if (static_cast<int>(side_info.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " side information sets");
  }
  Digraph g(n);
  for (int j = 1; j <= n; ++j) {
    NodeSet a = side_info[j - 1];
    if (!a.subset_of(g.nodes())) throw std::invalid_argument("side information of " + std::to_string(j) + " out of range");
    if (a.contains(j)) throw std::invalid_argument("receiver " + std::to_string(j) + " lists itself as side information");
    g.in_[j - 1] = a.mask();
    for (int i : a.members()) g.out_[i - 1] |= Mask{1} << (j - 1);
  }
  return g;
}

Digraph Digraph::from_side_info(int n, const std::vector<std::vector<int>>& side_info) {
  if (static_cast<int>(side_info.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " side information sets");
  }
  std::vector<Edge> edges;
  for (int j = 1; j <= n; ++j) {
    for (int i : side_info[j - 1]) edges.push_back({i, j});
  }
  return from_edges(n, edges);
}

std::vector<NodeSet> Digraph::side_info_sets() const {
  std::vector<NodeSet> out;
  out.reserve(in_.size());
  for (Mask m : in_) out.emplace_back(m);
  return out;
}

int Digraph::edge_count() const {
  int count = 0;
  for (Mask m : out_) count += std::popcount(m);
  return count;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j : out_neighbors(i).members()) out.push_back({i, j});
  }
  return out;
}

Digraph Digraph::with_edge(Edge e) const {
  check_node(e.from);
  check_node(e.to);
  if (e.from == e.to) throw std::invalid_argument("self-loop at node " + std::to_string(e.from));
  if (has_edge(e)) throw std::invalid_argument("duplicate edge " + e.str());
  Digraph g = *this;
  g.out_[e.from - 1] |= Mask{1} << (e.to - 1);
  g.in_[e.to - 1] |= Mask{1} << (e.from - 1);
  return g;
}

Digraph induced_subgraph(const Digraph& g, NodeSet s) {
  if (!s.subset_of(g.nodes())) throw std::invalid_argument("node set outside graph");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.from) && s.contains(e.to)) edges.push_back(e);
  }
  return Digraph::from_edges(g.n(), edges);
}

Digraph compact_subgraph(const Digraph& g, NodeSet s) {
  if (!s.subset_of(g.nodes())) throw std::invalid_argument("node set outside graph");
  std::vector<int> members = s.members();
  std::vector<int> index(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t k = 0; k < members.size(); ++k) index[members[k]] = static_cast<int>(k) + 1;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.from) && s.contains(e.to)) edges.push_back({index[e.from], index[e.to]});
  }
  return Digraph::from_edges(static_cast<int>(members.size()), edges);
}

bool is_acyclic_on(const Digraph& g, NodeSet s) {
  // Repeatedly strip nodes with no in-edge from the remaining set.
  Mask remaining = s.mask();
  bool progress = true;
  while (remaining != 0 && progress) {
    progress = false;
    for (Mask m = remaining; m != 0; m &= m - 1) {
      int v = std::countr_zero(m) + 1;
      if ((g.in_neighbors(v).mask() & remaining) == 0) {
        remaining &= ~(Mask{1} << (v - 1));
        progress = true;
      }
    }
  }
  return remaining == 0;
}

bool is_acyclic(const Digraph& g) { return is_acyclic_on(g, g.nodes()); }

NodeSet reachable_from(const Digraph& g, int from) {
  Mask seen = Mask{1} << (from - 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) next |= g.out_neighbors(std::countr_zero(m) + 1).mask();
    frontier = next & ~seen;
    seen |= next;
  }
  return NodeSet(seen);
}

bool lies_on_directed_cycle(const Digraph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge " + e.str() + " not in graph");
  return reachable_from(g, e.to).contains(e.from);
}

bool is_strongly_connected(const Digraph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    if (reachable_from(g, v) != g.nodes()) return false;
  }
  return true;
}

bool is_nondegraded_edge(const Digraph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge " + e.str() + " not in graph");
  return !g.side_info(e.from).subset_of(g.side_info(e.to));
}

bool is_clique(const Digraph& g, NodeSet s) {
  if (s.empty()) return false;
  for (int v : s.members()) {
    NodeSet others = s.without(v);
    if (!others.subset_of(g.out_neighbors(v))) return false;
  }
  return true;
}

std::vector<NodeSet> cliques(const Digraph& g) {
  // Grow cliques from each node through higher-numbered mutual neighbours.
  std::vector<Mask> mutual(static_cast<std::size_t>(g.n()), 0);
  for (int v = 1; v <= g.n(); ++v) mutual[v - 1] = g.out_neighbors(v).mask() & g.in_neighbors(v).mask();

  std::vector<NodeSet> out;
  auto extend = [&](auto&& self, Mask clique, Mask candidates) -> void {
    out.emplace_back(clique);
    for (Mask m = candidates; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      Mask higher = ~((Mask{2} << v) - 1);
      self(self, clique | (Mask{1} << v), candidates & mutual[v] & higher);
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    Mask higher = ~((Mask{2} << v) - 1);
    extend(extend, Mask{1} << v, mutual[v] & higher);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph remove_edge(const Digraph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge " + e.str() + " not in graph");
  std::vector<Edge> edges = g.edges();
  std::erase(edges, e);
  return Digraph::from_edges(g.n(), edges);
}

Digraph relabel(const Digraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> used(perm.size() + 1, false);
  for (int p : perm) {
    if (p < 1 || p > g.n() || used[p]) throw std::invalid_argument("not a permutation");
    used[p] = true;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.from - 1], perm[e.to - 1]});
  return Digraph::from_edges(g.n(), edges);
}

}  // namespace critidx
