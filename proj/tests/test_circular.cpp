#include <random>

#include "critidx/bounds.hpp"
#include "critidx/chain.hpp"
#include "critidx/circular.hpp"
#include "critidx/criticality.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace critidx;

namespace {

RateTuple rt(const char* text) { return parse_rate_tuple(text); }

Digraph chain4() { return Digraph::from_side_info(4, std::vector<std::vector<int>>{{2}, {1, 3}, {2, 4}, {3}}); }

/// Largest sum of R over node sets with no two consecutive chain nodes.
Rational best_independent(const Chain& c, const RateTuple& r) {
  const int nodes = c.length + 1;
  Rational best;
  for (unsigned m = 0; m < (1u << nodes); ++m) {
    if (m & (m >> 1)) continue;
    Rational sum;
    for (int k = 0; k < nodes; ++k) {
      if (m >> k & 1u) sum += r[static_cast<std::size_t>(c.node(k) - 1)];
    }
    best = max(best, sum);
  }
  return best;
}

bool covers(const ChainRho& rho, const RateTuple& r) {
  for (int k = 0; k <= rho.chain.length; ++k) {
    Rational got;
    if (k > 0) got += rho.pair_weights[static_cast<std::size_t>(k - 1)];
    if (k < rho.chain.length) got += rho.pair_weights[static_cast<std::size_t>(k)];
    if (got < r[static_cast<std::size_t>(rho.chain.node(k) - 1)]) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("circular") {
  TEST_CASE("class membership") {
    CHECK(is_circular_class(chain4()));
    CHECK(satisfies_proper_subset_condition(chain4()));
    CHECK_FALSE(is_circular_class(Digraph::from_side_info(5, std::vector<std::vector<int>>{{3}, {}, {}, {}, {}})));
    // At n = 3 every graph is in the class.
    CHECK(is_circular_class(Digraph::from_side_info(3, std::vector<std::vector<int>>{{2, 3}, {1}, {1, 2}})));
    const Digraph ring = Digraph::from_side_info(4, std::vector<std::vector<int>>{{4, 2}, {1, 3}, {2, 4}, {3, 1}});
    CHECK_FALSE(satisfies_proper_subset_condition(ring));
    CHECK(satisfies_proper_subset_condition(Digraph(4)));
    CHECK_THROWS_AS(chains(ring), std::invalid_argument);
  }

  TEST_CASE("chains are maximal bidirectional runs") {
    CHECK(chains(chain4()) == std::vector<Chain>{{1, 3, 4}});
    // Wrap-around run 4-1-2 plus an isolated node 3 hearing node 2.
    const Digraph g = Digraph::from_side_info(4, std::vector<std::vector<int>>{{2, 4}, {1}, {2}, {1}});
    CHECK(chains(g) == std::vector<Chain>{{4, 2, 4}});
    CHECK(chains(g).front().nodes() == std::vector<int>{4, 1, 2});
    CHECK(chains(Digraph::from_edges(2, {{1, 2}, {2, 1}})) == std::vector<Chain>{{1, 1, 2}});
  }

  TEST_CASE("chain algorithm examples") {
    const Chain one{1, 1, 2};
    CHECK(algorithm1(one, rt("2/5,3/5")).pair_weights == std::vector<Rational>{Rational(3, 5)});
    const Chain two{1, 2, 3};
    CHECK(algorithm1(two, rt("1/4,1/2,1/5")).pair_weights == std::vector<Rational>{Rational(1, 4), Rational(1, 4)});
    const Chain three{1, 3, 4};
    CHECK(algorithm1(three, rt("1/5,2/5,3/5,1/5")).pair_weights ==
          std::vector<Rational>{Rational(1, 5), Rational(2, 5), Rational(1, 5)});
    CHECK_THROWS_AS(algorithm1(two, rt("1/4,-1/2,1/5")), std::invalid_argument);
  }

  TEST_CASE("the two-pair step as printed leaves the far node short") {
    const Chain two{1, 2, 3};
    const RateTuple r = rt("0,0,1");
    CHECK_FALSE(covers(algorithm1(two, r, ChainRule::AsPrinted), r));
    CHECK(covers(algorithm1(two, r, ChainRule::Amended), r));
  }

  TEST_CASE("pair weights cover the chain and total the best independent sum") {
    std::mt19937_64 rng(41);
    for (int len = 1; len <= 6; ++len) {
      const Chain c{1, len, len + 2};
      for (int t = 0; t < 300; ++t) {
        RateTuple r(static_cast<std::size_t>(len + 2));
        for (auto& x : r) x = oracle::random_rational(rng, 7, 7);
        const ChainRho rho = algorithm1(c, r);
        for (const Rational& w : rho.pair_weights) CHECK_FALSE(w.is_negative());
        CHECK(covers(rho, r));
        CHECK(rho.total() == best_independent(c, r));
      }
    }
  }

  TEST_CASE("constructions per case") {
    const Digraph acyclic = Digraph::from_side_info(3, std::vector<std::vector<int>>{{}, {1}, {}});
    const ConstructedRho a = build_rho(acyclic, rt("1/3,1/3,1/3"));
    CHECK(a.proof_case == 1);
    CHECK(a.certified);
    CHECK(a.rho.at(NodeSet::of({2})) == Rational(1, 3));

    const Digraph ham = Digraph::from_side_info(5, std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {4}});
    CHECK(build_rho(ham, rt("1/4,1/4,1/4,1/4,0")).proof_case == 1);
    const Digraph full = Digraph::from_side_info(5, std::vector<std::vector<int>>{{5}, {1}, {2}, {3}, {4}});
    const ConstructedRho h = build_rho(full, rt("1/4,1/4,1/4,1/4,1/4"));
    CHECK(h.proof_case == 2);
    CHECK(h.certified);

    // Nodes 1 and 4 are not adjacent, so R_1 + R_4 <= 1 applies.
    CHECK_THROWS_AS(build_rho(chain4(), rt("1,0,0,1")), std::invalid_argument);
    const ConstructedRho c = build_rho(chain4(), rt("1/2,1/2,1/2,1/2"));
    CHECK(c.proof_case == 3);
    CHECK(c.certified);
    CHECK(flcc_certifies(chain4(), rt("1/2,1/2,1/2,1/2"), construct_rho(chain4(), rt("1/2,1/2,1/2,1/2"))));

    const RhoAssignment zero = construct_rho(chain4(), rt("0,0,0,0"));
    for (const auto& [k, w] : zero) CHECK(w.is_zero());

    CHECK_THROWS_AS(build_rho(chain4(), rt("1,0,1,0")), std::invalid_argument);
  }

  TEST_CASE("MAIS tightness on small members") {
    CHECK(verify_prop7(chain4()).holds);
    CHECK(verify_prop7(Digraph::from_side_info(5, std::vector<std::vector<int>>{{}, {1}, {2}, {3}, {4}})).holds);
    CHECK(verify_prop7(Digraph::from_side_info(2, std::vector<std::vector<int>>{{2}, {}})).holds);
  }

  TEST_CASE("critical edges are the unicycle edges") {
    const std::vector<Edge> chain_edges{{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}};
    CHECK(critical_edges_circular(chain4()) == chain_edges);
    const Digraph pure = Digraph::from_side_info(5, std::vector<std::vector<int>>{{5}, {1}, {2}, {3}, {4}});
    CHECK(critical_edges_circular(pure).size() == 5);
    CHECK(critical_edges_circular(Digraph::from_side_info(4, std::vector<std::vector<int>>{{}, {1}, {}, {}})).empty());
  }
}
