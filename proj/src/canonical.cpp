#include "critidx/canonical.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace critidx {

namespace {

int bit_count(int n) { return n * (n - 1); }

// Position of pair (i, j) counted from the most significant end.
int pair_index(int n, int i, int j) { return (i - 1) * (n - 1) + (j < i ? j - 1 : j - 2); }

std::uint64_t pair_bit(int n, int i, int j) {
  return std::uint64_t{1} << (bit_count(n) - 1 - pair_index(n, i, j));
}

// For every relabelling, where each code bit lands.
class PermutationTable {
 public:
  explicit PermutationTable(int n) : n_(n), bits_(bit_count(n)) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<std::uint64_t> image(static_cast<std::size_t>(bits_));
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          image[bits_ - 1 - pair_index(n, i, j)] = pair_bit(n, perm[i - 1], perm[j - 1]);
        }
      }
      images_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::uint64_t apply(std::size_t p, std::uint64_t code) const {
    const auto& image = images_[p];
    std::uint64_t out = 0;
    for (std::uint64_t m = code; m != 0; m &= m - 1) out |= image[static_cast<std::size_t>(std::countr_zero(m))];
    return out;
  }

  std::uint64_t minimum(std::uint64_t code) const {
    std::uint64_t best = code;
    for (std::size_t p = 0; p < images_.size(); ++p) best = std::min(best, apply(p, code));
    return best;
  }

  bool is_minimal(std::uint64_t code) const {
    for (std::size_t p = 0; p < images_.size(); ++p) {
      if (apply(p, code) < code) return false;
    }
    return true;
  }

 private:
  int n_;
  int bits_;
  std::vector<std::vector<std::uint64_t>> images_;
};

}  // namespace

std::string CanonicalCode::str() const {
  std::string out;
  int len = bit_count(n);
  out.reserve(static_cast<std::size_t>(len));
  for (int k = len - 1; k >= 0; --k) out += ((bits >> k) & 1u) ? '1' : '0';
  return out;
}

CanonicalCode adjacency_code(const Digraph& g) {
  if (g.n() > kMaxCanonicalNodes) throw std::invalid_argument("adjacency code limited to 8 nodes");
  CanonicalCode code{g.n(), 0};
  for (const Edge& e : g.edges()) code.bits |= pair_bit(g.n(), e.from, e.to);
  return code;
}

Digraph from_code(const CanonicalCode& code) {
  if (code.n < 0 || code.n > kMaxCanonicalNodes) throw std::invalid_argument("code node count out of range");
  std::vector<Edge> edges;
  for (int i = 1; i <= code.n; ++i) {
    for (int j = 1; j <= code.n; ++j) {
      if (i != j && (code.bits & pair_bit(code.n, i, j))) edges.push_back({i, j});
    }
  }
  return Digraph::from_edges(code.n, edges);
}

CanonicalCode canonical_code(const Digraph& g) {
  if (g.n() > kMaxCanonicalNodes) {
    throw std::invalid_argument("canonical code needs an exhaustive scan; n > 8 unsupported");
  }
  if (g.n() <= 1) return adjacency_code(g);
  // One table per thread and size; building the n = 8 table is the expensive part.
  thread_local std::vector<std::unique_ptr<PermutationTable>> tables(kMaxCanonicalNodes + 1);
  auto& table = tables[static_cast<std::size_t>(g.n())];
  if (!table) table = std::make_unique<PermutationTable>(g.n());
  return {g.n(), table->minimum(adjacency_code(g).bits)};
}

std::vector<Digraph> enumerate_nonisomorphic(int n, int workers) {
  if (n < 0 || n > kMaxEnumerationNodes) throw std::invalid_argument("enumeration supports 0 <= n <= 5");
  if (n <= 1) return {Digraph(n)};
  workers = std::max(1, workers);

  const PermutationTable table(n);
  const std::uint64_t space = std::uint64_t{1} << bit_count(n);
  // Contiguous code ranges so concatenating the per-worker lists keeps order.
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
  auto scan = [&](int w) {
    std::uint64_t lo = space * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    std::uint64_t hi = space * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    for (std::uint64_t code = lo; code < hi; ++code) {
      if (table.is_minimal(code)) found[static_cast<std::size_t>(w)].push_back(code);
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(scan, w);
  }

  std::vector<Digraph> out;
  for (const auto& part : found) {
    for (std::uint64_t code : part) out.push_back(from_code({n, code}));
  }
  return out;
}

}  // namespace critidx
