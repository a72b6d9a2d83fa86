#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "critidx/digraph.hpp"

namespace critidx {

inline constexpr int kMaxCanonicalNodes = 8;
inline constexpr int kMaxEnumerationNodes = 5;

/// Row-major off-diagonal adjacency bits, first pair (1,2) in the most
/// significant position, so integer order is lexicographic bit-string order.
struct CanonicalCode {
  int n = 0;
  std::uint64_t bits = 0;

  friend constexpr auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  /// The code as a '0'/'1' string of length n(n-1).
  std::string str() const;
};

/// Adjacency code of G under its current labelling.
CanonicalCode adjacency_code(const Digraph& g);
Digraph from_code(const CanonicalCode& code);

/// Minimum adjacency code over all n! relabellings. Throws for n > 8.
CanonicalCode canonical_code(const Digraph& g);

/// One representative per isomorphism class of simple digraphs on n nodes,
/// each the labelling that attains its canonical code, in ascending code
/// order. Throws for n outside [0..5]. The output does not depend on
/// `workers`.
std::vector<Digraph> enumerate_nonisomorphic(int n, int workers = 1);

}  // namespace critidx
