#include <random>

#include "critidx/bounds.hpp"
#include "critidx/canonical.hpp"
#include "critidx/census.hpp"
#include "critidx/criticality.hpp"
#include "critidx/cycle_codec.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critidx;

namespace {

Digraph three_receivers() { return Digraph::from_side_info(3, std::vector<std::vector<int>>{{2, 3}, {1}, {1, 2}}); }

Digraph cycle(int m) {
  std::vector<Edge> e;
  for (int j = 1; j <= m; ++j) e.push_back({j, j % m + 1});
  return Digraph::from_edges(m, e);
}

}  // namespace

TEST_SUITE("criticality") {
  TEST_CASE("unicycle recognition") {
    CHECK(is_unicycle(cycle(3)));
    CHECK(is_unicycle(Digraph::from_edges(2, {{1, 2}, {2, 1}})));
    CHECK_FALSE(is_unicycle(three_receivers()));
    CHECK_FALSE(is_unicycle(Digraph::from_edges(3, {{1, 2}, {2, 1}})));
    CHECK_FALSE(is_unicycle(Digraph(1)));
  }

  TEST_CASE("three-receiver example: witnesses") {
    const Digraph g = three_receivers();
    CHECK(find_unicycle_containing(g, {1, 2}) == NodeSet::of({1, 2}));
    CHECK_FALSE(find_unicycle_containing(g, {2, 3}));
    CHECK(edges_in_unicycles(g) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 1}, {3, 1}});
    CHECK_THROWS_AS(find_unicycle_containing(g, {3, 2}), std::invalid_argument);
  }

  TEST_CASE("three-receiver example: verdicts") {
    const Digraph g = three_receivers();
    const EdgeVerdict v = classify_edge(g, {2, 3});
    CHECK(v.status == EdgeStatus::NonCritical);
    CHECK(v.reason == VerdictReason::DegradedSideInfo);
    const EdgeVerdict w = classify_edge(g, {1, 3});
    CHECK(w.status == EdgeStatus::Critical);
    CHECK(w.witness == NodeSet::of({1, 3}));
    const GraphVerdict gv = classify_graph(g);
    CHECK(gv.graph_status == GraphStatus::NotCritical);
    CHECK_FALSE(gv.vacuous);
  }

  TEST_CASE("cascade order") {
    const Digraph path = Digraph::from_edges(3, {{1, 2}, {2, 3}});
    CHECK(classify_edge(path, {1, 2}).reason == VerdictReason::NoDirectedCycle);
    const GraphVerdict empty = classify_graph(Digraph(3));
    CHECK(empty.vacuous);
    CHECK(empty.graph_status == GraphStatus::Critical);
    CHECK(classify_graph(cycle(5)).graph_status == GraphStatus::Critical);
  }

  TEST_CASE("cache does not change verdicts") {
    TightnessCache cache;
    for (const Digraph& g : enumerate_nonisomorphic(4)) {
      const GraphVerdict a = classify_graph(g);
      const GraphVerdict b = classify_graph(g, &cache);
      REQUIRE(a.per_edge.size() == b.per_edge.size());
      for (std::size_t k = 0; k < a.per_edge.size(); ++k) {
        CHECK(a.per_edge[k].second.status == b.per_edge[k].second.status);
        CHECK(a.per_edge[k].second.reason == b.per_edge[k].second.reason);
      }
    }
    CHECK(cache.size() > 0);
  }

  TEST_CASE("unicycle search agrees with the direct definition") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 400; ++t) {
      const Digraph g = oracle::random_graph(rng, 2 + t % 5);
      for (const Edge& e : g.edges()) {
        const auto s = find_unicycle_containing(g, e);
        REQUIRE(s.has_value() == oracle::edge_in_unicycle(g, e));
        if (s) CHECK(oracle::induces_unicycle(oracle::adjacency(g), s->members()));
      }
    }
  }

  TEST_CASE("verdicts are invariant under relabelling") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + t % 4;
      const Digraph g = oracle::random_graph(rng, n);
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 1);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Digraph h = relabel(g, perm);
      for (const Edge& e : g.edges()) {
        const Edge f{perm[static_cast<std::size_t>(e.from - 1)], perm[static_cast<std::size_t>(e.to - 1)]};
        CHECK(classify_edge(g, e).status == classify_edge(h, f).status);
        CHECK(classify_edge(g, e).reason == classify_edge(h, f).reason);
      }
    }
  }

  TEST_CASE("hub-augmented cycles and blow-ups") {
    const Digraph g = generate_prop4_part1(3, 1, 2, 3);
    CHECK(g.n() == 4);
    CHECK(g.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 1}, {2, 4}, {3, 2}, {4, 1}, {4, 3}});
    CHECK_THROWS_AS(generate_prop4_part1(3, 2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(generate_prop4_part1(3, 1, 3, 2), std::invalid_argument);
    const Digraph b = blow_up_cliques(Digraph::from_edges(2, {{1, 2}}), {2, 1});
    CHECK(b.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 1}, {2, 3}});
    CHECK_THROWS(blow_up_cliques(g, {1, 1}));
  }
}

TEST_SUITE("cycle-codec") {
  TEST_CASE("directed 3-cycle") {
    const Digraph g = cycle(3);
    const IndexCode code = build_cycle_code(g, g.nodes(), 1);
    CHECK(code.index_bits == 2);
    CHECK(code.transmissions == std::vector<std::string>{"x1+x2", "x2+x3"});
    CHECK(verify_code(code, g));
    CHECK(achieved_rates(code) == RateTuple{Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  }

  TEST_CASE("two-node pair") {
    const Digraph g = Digraph::from_edges(2, {{1, 2}, {2, 1}});
    const IndexCode code = build_cycle_code(g, g.nodes(), 1);
    CHECK(code.index_bits == 1);
    CHECK(verify_code(code, g));
    CHECK(achieved_rates(code) == RateTuple{1, 1});
  }

  TEST_CASE("multi-bit messages and bystanders") {
    const Digraph g = Digraph::from_edges(5, {{1, 2}, {2, 4}, {4, 1}, {3, 1}, {5, 3}});
    const IndexCode code = build_cycle_code(g, NodeSet::of({1, 2, 4}), 4);
    CHECK(code.index_bits == 8);
    CHECK(code.message_bits == std::vector<int>{4, 4, 0, 4, 0});
    CHECK(verify_code(code, g));
    CHECK(verify_code_sampled(code, g, 500, 1));
    const IndexCode wide = build_cycle_code(g, NodeSet::of({1, 2, 4}), 16);
    CHECK_THROWS_AS(verify_code(wide, g), std::invalid_argument);
    CHECK(verify_code_sampled(wide, g, 2000, 7));
  }

  TEST_CASE("rejects sets that are not unicycles") {
    const Digraph g = three_receivers();
    CHECK_THROWS_AS(build_cycle_code(g, g.nodes(), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_cycle_code(cycle(3), cycle(3).nodes(), 0), std::invalid_argument);
  }

  TEST_CASE("a decoder without the side information fails") {
    // Same code, but receiver 1 no longer knows x3.
    const Digraph g = cycle(3);
    const IndexCode code = build_cycle_code(g, g.nodes(), 1);
    const Digraph weaker = remove_edge(g, {3, 1});
    CHECK_FALSE(verify_code(code, weaker));
  }

  TEST_CASE("every induced unicycle yields a working code") {
    for (const Digraph& g : enumerate_nonisomorphic(4)) {
      for (unsigned m = 3; m < 16; ++m) {
        if (!oracle::induces_unicycle(oracle::adjacency(g), oracle::members(m, 4))) continue;
        for (int t = 1; t <= 2; ++t) CHECK(verify_code(build_cycle_code(g, NodeSet(m), t), g));
      }
    }
  }
}

TEST_SUITE("census") {
  TEST_CASE("small censuses") {
    const std::vector<std::int64_t> totals{1, 3, 16, 218};
    for (int n = 1; n <= 4; ++n) {
      const CensusReport r = run_census(n, {true}, 1);
      CHECK(r.total == totals[static_cast<std::size_t>(n - 1)]);
      CHECK(r.all_edges_unicycle <= r.necessary_pass);
      CHECK(r.necessary_pass <= r.total);
    }
  }

  TEST_CASE("vacuous convention removes exactly the edgeless graph") {
    const CensusReport in = run_census(3, {true}, 1);
    const CensusReport out = run_census(3, {false}, 1);
    CHECK(in.all_edges_unicycle == out.all_edges_unicycle + 1);
    CHECK(in.necessary_pass == out.necessary_pass + 1);
  }

  TEST_CASE("worker count does not change the report") {
    const CensusReport a = run_census(4, {true}, 1);
    const CensusReport b = run_census(4, {true}, 3);
    CHECK(a.summary_json() == b.summary_json());
    CHECK(a.rows_jsonl() == b.rows_jsonl());
  }

  TEST_CASE("rows agree with the brute-force checks") {
    for (const Digraph& g : enumerate_nonisomorphic(4)) {
      const CensusRow row = census_row(g);
      bool all_uni = true;
      for (const Edge& e : g.edges()) all_uni = all_uni && oracle::edge_in_unicycle(g, e);
      CHECK(row.all_edges_unicycle == all_uni);
      if (row.all_edges_unicycle) CHECK(row.necessary_pass());
    }
  }

  TEST_CASE("rejects unsupported sizes") {
    CHECK_THROWS_AS(run_census(0, {true}, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_census(6, {true}, 1), std::invalid_argument);
  }
}
