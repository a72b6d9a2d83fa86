#include "critidx/circular.hpp"

#include "critidx/criticality.hpp"

namespace critidx {

namespace {

void require_class(const Digraph& g) {
  if (!is_circular_class(g)) throw std::invalid_argument("graph is not in the circular class");
}

NodeSet ring_neighbors(int j, int n) { return NodeSet().with(ring(j - 1, n)).with(ring(j + 1, n)).without(j); }

bool has_two_cycle(const Digraph& g) {
  for (int v = 1; v <= g.n(); ++v) {
    if (!(g.out_neighbors(v) & g.in_neighbors(v)).empty()) return true;
  }
  return false;
}

// Works on rates[lo..hi] in place; weights[p] is pair (p, p+1).
void assign_chain(std::vector<Rational>& rates, std::vector<Rational>& weights, std::size_t lo, std::size_t hi,
                  ChainRule rule) {
  const std::size_t len = hi - lo;
  if (len == 0) return;
  if (len == 1) {
    weights[lo] = max(rates[lo], rates[lo + 1]);
    return;
  }
  if (len == 2) {
    weights[lo] = rates[lo];
    if (rates[lo + 1] <= rates[lo] + rates[lo + 2]) {
      weights[lo + 1] = rule == ChainRule::AsPrinted ? rates[lo + 1] : rates[lo + 2];
    } else {
      weights[lo + 1] = rates[lo + 1] - rates[lo];
    }
    return;
  }
  if (rates[lo] > rates[lo + 1]) {
    weights[lo] = rates[lo];
    weights[lo + 1] = 0;
    assign_chain(rates, weights, lo + 2, hi, rule);
  } else if (rates[hi] > rates[hi - 1]) {
    weights[hi - 1] = rates[hi];
    weights[hi - 2] = 0;
    assign_chain(rates, weights, lo, hi - 2, rule);
  } else if (rule == ChainRule::Amended || (rates[lo] < rates[lo + 1] && rates[hi] < rates[hi - 1])) {
    weights[lo] = rates[lo];
    weights[hi - 1] = rates[hi];
    rates[lo + 1] -= rates[lo];
    rates[hi - 1] -= rates[hi];
    assign_chain(rates, weights, lo + 1, hi - 1, rule);
  }
}

}  // namespace

bool satisfies_proper_subset_condition(const Digraph& g) {
  require_class(g);
  for (int j = 1; j <= g.n(); ++j) {
    if (g.side_info(j).proper_subset_of(ring_neighbors(j, g.n()))) return true;
  }
  return false;
}

std::map<NodeSet, Rational> ChainRho::as_map() const {
  std::map<NodeSet, Rational> out;
  for (std::size_t p = 0; p < pair_weights.size(); ++p) {
    int a = chain.node(static_cast<int>(p));
    int b = chain.node(static_cast<int>(p) + 1);
    out.emplace(NodeSet().with(a).with(b), pair_weights[p]);
  }
  return out;
}

Rational ChainRho::total() const {
  Rational sum;
  for (const Rational& w : pair_weights) sum += w;
  return sum;
}

ChainRho algorithm1(const Chain& chain, const RateTuple& r, ChainRule rule) {
  if (chain.length < 1) throw std::invalid_argument("chain needs at least one pair");
  std::vector<Rational> rates;
  for (int node : chain.nodes()) {
    if (node < 1 || node > static_cast<int>(r.size())) throw std::invalid_argument("chain node outside rate tuple");
    if (r[node - 1].is_negative()) throw std::invalid_argument("negative rate");
    rates.push_back(r[node - 1]);
  }
  ChainRho out{chain, std::vector<Rational>(static_cast<std::size_t>(chain.length))};
  assign_chain(rates, out.pair_weights, 0, static_cast<std::size_t>(chain.length), rule);
  return out;
}

ConstructedRho build_rho(const Digraph& g, const RateTuple& r, ChainRule rule) {
  require_class(g);
  if (!satisfies_proper_subset_condition(g)) throw std::invalid_argument("every A_j equals {j-1, j+1}");
  if (static_cast<int>(r.size()) != g.n()) throw std::invalid_argument("rate tuple dimension mismatch");
  if (!mais_region(g).region.contains(r)) throw std::invalid_argument("rate tuple outside the MAIS region");

  ConstructedRho out;
  const auto found = chains(g);
  if (found.empty()) {
    out.proof_case = is_acyclic(g) ? 1 : 2;
    if (out.proof_case == 2 && has_two_cycle(g)) throw std::logic_error("two-cycle outside every chain");
    for (int j = 1; j <= g.n(); ++j) out.rho.emplace(NodeSet().with(j), r[j - 1]);
  } else {
    out.proof_case = 3;
    NodeSet on_chain;
    for (const Chain& c : found) {
      for (int v : c.nodes()) on_chain = on_chain.with(v);
    }
    for (int j = 1; j <= g.n(); ++j) {
      out.rho.emplace(NodeSet().with(j), on_chain.contains(j) ? Rational() : r[j - 1]);
    }
    for (const Chain& c : found) {
      for (const auto& [pair, w] : algorithm1(c, r, rule).as_map()) out.rho.emplace(pair, w);
    }
  }
  out.certified = flcc_certifies(g, r, out.rho);
  return out;
}

RhoAssignment construct_rho(const Digraph& g, const RateTuple& r) {
  ConstructedRho built = build_rho(g, r, ChainRule::Amended);
  if (!built.certified) {
    throw ProofViolation("chain construction fails to certify " + format_rate_tuple(r) + " (case " +
                         std::to_string(built.proof_case) + ")");
  }
  return std::move(built.rho);
}

Prop7Report verify_prop7(const Digraph& g) {
  require_class(g);
  if (!satisfies_proper_subset_condition(g)) throw std::invalid_argument("every A_j equals {j-1, j+1}");
  Prop7Report report;
  for (const RateTuple& v : region_vertices(mais_region(g).region)) {
    ++report.vertices;
    if (!report.construction_failure && !build_rho(g, v).certified) report.construction_failure = v;
    if (!report.lp_failure && !flcc_achievable(g, v).achievable) report.lp_failure = v;
  }
  report.holds = !report.construction_failure && !report.lp_failure;
  return report;
}

std::vector<Edge> critical_edges_circular(const Digraph& g) {
  require_class(g);
  return edges_in_unicycles(g);
}

}  // namespace critidx
