#include "critidx/cycle_codec.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "critidx/criticality.hpp"

namespace critidx {

int IndexCode::offset(int node) const {
  int off = 0;
  for (int v = 1; v < node; ++v) off += message_bits[v - 1];
  return off;
}

int IndexCode::total_message_bits() const {
  int total = 0;
  for (int t : message_bits) total += t;
  return total;
}

std::uint32_t IndexCode::message(PackedMessages x, int node) const {
  const int t = message_bits[node - 1];
  if (t == 0) return 0;
  return static_cast<std::uint32_t>((x >> offset(node)) & ((PackedMessages{1} << t) - 1));
}

IndexCode build_cycle_code(const Digraph& g, NodeSet s, int t) {
  if (t < 1 || t > 32) throw std::invalid_argument("bits per message must be in [1, 32]");
  if (!s.subset_of(g.nodes()) || !is_unicycle(compact_subgraph(g, s))) {
    throw std::invalid_argument("node set " + s.str() + " does not induce a unicycle");
  }
  // Cycle order from the smallest member.
  std::vector<int> cycle;
  int v = s.first();
  do {
    cycle.push_back(v);
    v = (g.out_neighbors(v) & s).first();
  } while (v != s.first());

  const std::size_t m = cycle.size();
  std::vector<Edge> cycle_edges;
  for (std::size_t a = 0; a < m; ++a) cycle_edges.push_back({cycle[a], cycle[(a + 1) % m]});
  const Edge omitted = *std::max_element(cycle_edges.begin(), cycle_edges.end());
  std::vector<Edge> sent;
  for (const Edge& e : cycle_edges) {
    if (e != omitted) sent.push_back(e);
  }

  IndexCode code;
  code.message_bits.assign(static_cast<std::size_t>(g.n()), 0);
  for (int u : s.members()) code.message_bits[u - 1] = t;
  code.index_bits = static_cast<int>(sent.size()) * t;
  if (code.total_message_bits() > 64 || code.index_bits > 64) {
    throw std::invalid_argument("packed messages or index word exceed 64 bits");
  }
  for (const Edge& e : sent) {
    for (int b = 0; b < t; ++b) {
      std::string lhs = "x" + std::to_string(e.from);
      std::string rhs = "x" + std::to_string(e.to);
      if (t > 1) {
        lhs += "[" + std::to_string(b) + "]";
        rhs += "[" + std::to_string(b) + "]";
      }
      code.transmissions.push_back(lhs + "+" + rhs);
    }
  }

  const std::vector<int> bits = code.message_bits;
  auto message = [bits](PackedMessages x, int node) {
    int off = 0;
    for (int u = 1; u < node; ++u) off += bits[u - 1];
    const int len = bits[node - 1];
    return len == 0 ? PackedMessages{0} : (x >> off) & ((PackedMessages{1} << len) - 1);
  };

  code.encoder = [sent, t, message](PackedMessages x) {
    IndexWord y = 0;
    for (std::size_t k = 0; k < sent.size(); ++k) {
      y |= (message(x, sent[k].from) ^ message(x, sent[k].to)) << (static_cast<int>(k) * t);
    }
    return y;
  };

  const IndexWord block = (IndexWord{1} << t) - 1;
  code.decoders.resize(static_cast<std::size_t>(g.n()));
  for (int j = 1; j <= g.n(); ++j) {
    if (!s.contains(j)) {
      code.decoders[j - 1] = [](IndexWord, PackedMessages) { return std::uint32_t{0}; };
      continue;
    }
    const auto pos = std::find(cycle.begin(), cycle.end(), j) - cycle.begin();
    const int pred = cycle[static_cast<std::size_t>((pos + static_cast<std::ptrdiff_t>(m) - 1)) % m];
    const Edge incoming{pred, j};
    const auto direct = std::find(sent.begin(), sent.end(), incoming);
    if (direct != sent.end()) {
      const int k = static_cast<int>(direct - sent.begin());
      code.decoders[j - 1] = [k, t, block, pred, message](IndexWord y, PackedMessages side) {
        return static_cast<std::uint32_t>(((y >> (k * t)) & block) ^ message(side, pred));
      };
    } else {
      // The other cycle edges telescope to x_j + x_pred.
      const int count = static_cast<int>(sent.size());
      code.decoders[j - 1] = [count, t, block, pred, message](IndexWord y, PackedMessages side) {
        IndexWord acc = 0;
        for (int k = 0; k < count; ++k) acc ^= (y >> (k * t)) & block;
        return static_cast<std::uint32_t>(acc ^ message(side, pred));
      };
    }
  }
  return code;
}

namespace {

bool decodes(const IndexCode& code, const Digraph& g, PackedMessages x, const std::vector<PackedMessages>& side_masks) {
  const IndexWord y = code.encoder(x);
  for (int j = 1; j <= g.n(); ++j) {
    if (code.message_bits[j - 1] == 0) continue;
    if (code.decoders[j - 1](y, x & side_masks[j - 1]) != code.message(x, j)) return false;
  }
  return true;
}

std::vector<PackedMessages> side_masks(const IndexCode& code, const Digraph& g) {
  if (static_cast<int>(code.message_bits.size()) != g.n() || static_cast<int>(code.decoders.size()) != g.n()) {
    throw std::invalid_argument("code and graph disagree on receiver count");
  }
  std::vector<PackedMessages> masks(static_cast<std::size_t>(g.n()), 0);
  for (int j = 1; j <= g.n(); ++j) {
    for (int i : g.side_info(j).members()) {
      const int t = code.message_bits[i - 1];
      if (t > 0) masks[j - 1] |= ((PackedMessages{1} << t) - 1) << code.offset(i);
    }
  }
  return masks;
}

}  // namespace

bool verify_code_sampled(const IndexCode& code, const Digraph& g, int samples, std::uint64_t seed) {
  const int total = code.total_message_bits();
  if (total > 64) throw std::invalid_argument("packed messages exceed 64 bits");
  const auto masks = side_masks(code, g);
  const PackedMessages domain = total == 64 ? ~PackedMessages{0} : (PackedMessages{1} << total) - 1;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    if (!decodes(code, g, rng() & domain, masks)) return false;
  }
  return true;
}

bool verify_code(const IndexCode& code, const Digraph& g) {
  const int total = code.total_message_bits();
  if (total > kMaxExhaustiveBits) throw std::invalid_argument("exhaustive check limited to 20 message bits");
  if (!verify_code_sampled(code, g, 10000, 0x5eed)) return false;
  const auto masks = side_masks(code, g);
  for (PackedMessages x = 0; x < (PackedMessages{1} << total); ++x) {
    if (!decodes(code, g, x, masks)) return false;
  }
  return true;
}

RateTuple achieved_rates(const IndexCode& code) {
  if (code.index_bits < 1) throw std::invalid_argument("index length must be positive");
  RateTuple out;
  for (int t : code.message_bits) out.emplace_back(t, code.index_bits);
  return out;
}

}  // namespace critidx
