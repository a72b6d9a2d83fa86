#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "critidx/digraph.hpp"
#include "critidx/region.hpp"

namespace critidx {

/// Message tuples travel packed into one word: message j occupies
/// message_bits[j-1] consecutive bits, little-endian, messages in node order.
using PackedMessages = std::uint64_t;
using IndexWord = std::uint64_t;

inline constexpr int kMaxExhaustiveBits = 20;

/// A (t_1, ..., t_n, r) index code. Each decoder sees the index word and a
/// packed tuple in which every message outside its receiver's side
/// information has been zeroed.
struct IndexCode {
  std::vector<int> message_bits;
  int index_bits = 0;
  std::function<IndexWord(PackedMessages)> encoder;
  std::vector<std::function<std::uint32_t(IndexWord, PackedMessages)>> decoders;
  /// Human-readable transmitted combinations, one per index bit.
  std::vector<std::string> transmissions;

  int offset(int node) const;
  int total_message_bits() const;
  std::uint32_t message(PackedMessages x, int node) const;
};

/// XOR code along the Hamiltonian cycle of G|_S: each cycle edge u->v except
/// the lexicographically largest carries x_u + x_v, bitwise for t-bit
/// messages. Nodes outside S get zero-length messages. Throws
/// std::invalid_argument unless G|_S is a unicycle and t >= 1.
IndexCode build_cycle_code(const Digraph& g, NodeSet s, int t);

/// Decoding succeeds for every message tuple and receiver. Runs a fixed-seed
/// random sample first, then the exhaustive sweep. Throws
/// std::invalid_argument when the total message length exceeds 20 bits.
bool verify_code(const IndexCode& code, const Digraph& g);

/// Decoding succeeds on `samples` random tuples (total length <= 64 bits).
bool verify_code_sampled(const IndexCode& code, const Digraph& g, int samples, std::uint64_t seed);

/// (t_j / r). Throws std::invalid_argument when r = 0.
RateTuple achieved_rates(const IndexCode& code);

}  // namespace critidx
