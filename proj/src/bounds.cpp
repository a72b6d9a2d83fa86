#include "critidx/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace critidx {

namespace {

// acyclic[S] for every subset S of the node set.
std::vector<bool> acyclic_table(const Digraph& g) {
  if (g.n() > kMaxSubsetScanNodes) throw std::invalid_argument("subset scan limited to 20 nodes");
  const Mask full = NodeSet::all(g.n()).mask();
  std::vector<bool> acyclic(static_cast<std::size_t>(full) + 1, false);
  acyclic[0] = true;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    // S is acyclic iff some member has no in-edge from S and the rest is acyclic.
    for (Mask m = s; m != 0; m &= m - 1) {
      int v = std::countr_zero(m) + 1;
      if ((g.in_neighbors(v).mask() & s) == 0 && acyclic[s & ~(Mask{1} << (v - 1))]) {
        acyclic[s] = true;
        break;
      }
    }
  }
  return acyclic;
}

void check_rates(const Digraph& g, const RateTuple& r) {
  if (static_cast<int>(r.size()) != g.n()) throw std::invalid_argument("rate tuple dimension mismatch");
  for (const Rational& x : r) {
    if (x.is_negative()) throw std::invalid_argument("negative rate");
  }
}

}  // namespace

std::vector<NodeSet> maximal_acyclic_sets(const Digraph& g) {
  const auto acyclic = acyclic_table(g);
  const Mask full = NodeSet::all(g.n()).mask();
  std::vector<NodeSet> out;
  for (Mask s = 0; s <= full; ++s) {
    if (!acyclic[s]) continue;
    bool maximal = true;
    for (Mask m = full & ~s; m != 0; m &= m - 1) {
      if (acyclic[s | (m & -m)]) {
        maximal = false;
        break;
      }
    }
    if (maximal && s != 0) out.emplace_back(s);
    if (s == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

MaisBound mais_region(const Digraph& g) {
  auto sets = maximal_acyclic_sets(g);
  int largest = 0;
  for (NodeSet s : sets) largest = std::max(largest, s.size());
  return {RateRegion(g.n(), std::move(sets)), largest};
}

LPProblem flcc_problem(const Digraph& g, const RateTuple& r) {
  check_rates(g, r);
  const auto ks = cliques(g);
  const std::size_t vars = ks.size();
  LPProblem p;
  p.variables = vars;
  for (int j = 1; j <= g.n(); ++j) {
    std::vector<Rational> load(vars);
    for (std::size_t k = 0; k < vars; ++k) {
      if (!ks[k].subset_of(g.side_info(j))) load[k] = 1;
    }
    p.add_row(std::move(load), Relation::LessEqual, 1);
  }
  for (int j = 1; j <= g.n(); ++j) {
    std::vector<Rational> cover(vars);
    for (std::size_t k = 0; k < vars; ++k) {
      if (ks[k].contains(j)) cover[k] = 1;
    }
    p.add_row(std::move(cover), Relation::GreaterEqual, r[j - 1]);
  }
  for (std::size_t k = 0; k < vars; ++k) {
    std::vector<Rational> cap(vars);
    cap[k] = 1;
    p.add_row(std::move(cap), Relation::LessEqual, 1);
  }
  return p;
}

bool flcc_certifies(const Digraph& g, const RateTuple& r, const RhoAssignment& rho) {
  check_rates(g, r);
  for (const auto& [s, w] : rho) {
    if (!is_clique(g, s) || w.is_negative() || w > 1) return false;
  }
  for (int j = 1; j <= g.n(); ++j) {
    Rational load;
    Rational cover;
    for (const auto& [s, w] : rho) {
      if (!s.subset_of(g.side_info(j))) load += w;
      if (s.contains(j)) cover += w;
    }
    if (load > 1 || cover < r[j - 1]) return false;
  }
  return true;
}

FlccResult flcc_achievable(const Digraph& g, const RateTuple& r) {
  LPProblem p = flcc_problem(g, r);
  auto solution = lp_feasible(p);
  if (!solution) return {false, std::nullopt};
  const auto ks = cliques(g);
  RhoAssignment rho;
  for (std::size_t k = 0; k < ks.size(); ++k) {
    if (!solution->x[k].is_zero()) rho.emplace(ks[k], solution->x[k]);
  }
  return {true, std::move(rho)};
}

std::optional<NodeSet> mais_shrinks_on_removal(const Digraph& g, Edge e) {
  const Digraph ge = remove_edge(g, e);
  const bool shrinks = region_proper_subset(mais_region(ge).region, mais_region(g).region);

  const auto before = acyclic_table(g);
  const auto after = acyclic_table(ge);
  const Mask full = NodeSet::all(g.n()).mask();
  std::optional<NodeSet> witness;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    if (before[s] || !after[s]) continue;
    NodeSet cand(s);
    if (!witness || cand.size() < witness->size() || (cand.size() == witness->size() && cand < *witness)) {
      witness = cand;
    }
  }
  if (shrinks != witness.has_value()) {
    throw std::logic_error("MAIS region comparison disagrees with the acyclic subset scan on edge " + e.str());
  }
  return witness;
}

TightnessReport mais_tightness(const Digraph& g) {
  TightnessReport report;
  for (const RateTuple& v : region_vertices(mais_region(g).region)) {
    ++report.vertices_checked;
    if (!flcc_achievable(g, v).achievable) {
      report.tight = false;
      report.counterexample = v;
      break;
    }
  }
  return report;
}

bool mais_tight_via_flcc(const Digraph& g) { return mais_tightness(g).tight; }

SymmetricBounds symmetric_bounds(const Digraph& g) {
  if (g.n() == 0) return {Rational(), Rational()};
  const MaisBound mais = mais_region(g);
  // Variables: clique weights, then the common rate R.
  const auto ks = cliques(g);
  LPProblem p = flcc_problem(g, RateTuple(static_cast<std::size_t>(g.n())));
  p.variables = ks.size() + 1;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    bool coverage_row = i >= static_cast<std::size_t>(g.n()) && i < static_cast<std::size_t>(2 * g.n());
    p.rows[i].coeffs.push_back(coverage_row ? Rational(-1) : Rational());
    if (coverage_row) p.rows[i].rhs = 0;
  }
  std::vector<Rational> objective(p.variables);
  objective.back() = 1;
  p.objective = std::move(objective);
  const LPSolution best = lp_maximize(p);
  SymmetricBounds out{best.objective, Rational(1, mais.mais_number)};
  if (out.lower > out.upper) throw std::logic_error("inner bound exceeds outer bound");
  return out;
}

}  // namespace critidx
