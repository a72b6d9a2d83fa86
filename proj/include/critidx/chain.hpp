#pragma once

#include <vector>

#include "critidx/digraph.hpp"

namespace critidx {

/// Maps any integer onto the ring [1..n] (so 0 -> n, n+1 -> 1).
inline int ring(int j, int n) { return ((j - 1) % n + n) % n + 1; }

/// Every A_j is contained in {j-1, j+1}, indices taken around the ring.
/// For n = 3 the condition holds for every graph.
bool is_circular_class(const Digraph& g);

/// Nodes start, start+1, ..., start+length around the ring, consecutive
/// ones joined by a bidirectional pair.
struct Chain {
  int start = 1;
  int length = 1;
  int n = 0;

  std::vector<int> nodes() const;
  int node(int offset) const { return ring(start + offset, n); }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Maximal runs of consecutive bidirectional pairs {j, j+1}, ordered by start
/// node. A run's endpoints may still hear one-sidedly from outside the run.
/// Throws std::invalid_argument when G is outside the circular class or when
/// every ring pair is bidirectional (no run has endpoints).
std::vector<Chain> chains(const Digraph& g);

}  // namespace critidx
