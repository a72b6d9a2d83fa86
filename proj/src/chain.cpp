#include "critidx/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace critidx {

bool is_circular_class(const Digraph& g) {
  const int n = g.n();
  for (int j = 1; j <= n; ++j) {
    NodeSet allowed = NodeSet().with(ring(j - 1, n)).with(ring(j + 1, n)).without(j);
    if (!g.side_info(j).subset_of(allowed)) return false;
  }
  return true;
}

std::vector<int> Chain::nodes() const {
  std::vector<int> out;
  for (int k = 0; k <= length; ++k) out.push_back(node(k));
  return out;
}

std::vector<Chain> chains(const Digraph& g) {
  if (!is_circular_class(g)) throw std::invalid_argument("graph is not in the circular class");
  const int n = g.n();
  if (n < 2) return {};

  // Ring pair j is {j, j+1}; for n = 2 both ring pairs are the same pair.
  const int pair_count = n == 2 ? 1 : n;
  std::vector<bool> mutual(static_cast<std::size_t>(pair_count));
  for (int j = 1; j <= pair_count; ++j) {
    int k = ring(j + 1, n);
    mutual[j - 1] = g.has_edge(j, k) && g.has_edge(k, j);
  }
  if (n == 2) {
    if (mutual[0]) return {Chain{1, 1, n}};
    return {};
  }
  if (std::all_of(mutual.begin(), mutual.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("every ring pair is bidirectional; no chain has endpoints");
  }

  std::vector<Chain> out;
  for (int j = 1; j <= n; ++j) {
    if (!mutual[j - 1] || mutual[ring(j - 1, n) - 1]) continue;
    int length = 0;
    while (mutual[ring(j + length, n) - 1]) ++length;
    out.push_back(Chain{j, length, n});
  }
  return out;
}

}  // namespace critidx
