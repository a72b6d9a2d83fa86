#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "critidx/bounds.hpp"
#include "critidx/chain.hpp"
#include "critidx/digraph.hpp"
#include "critidx/region.hpp"

namespace critidx {

/// Raised when a construction that is proven to certify a rate tuple does
/// not. Never caught inside the library.
class ProofViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Some A_j is a proper subset of {j-1, j+1}. Throws std::invalid_argument
/// outside the circular class.
bool satisfies_proper_subset_condition(const Digraph& g);

/// How the two-pair step of the chain algorithm sets the second pair when
/// R_{i+1} <= R_i + R_{i+2}.
///
/// `AsPrinted` uses R_{i+1}, which leaves node i+2 short whenever
/// R_{i+2} > R_{i+1} (for instance R = (0, 0, 1)). `Amended` uses R_{i+2},
/// which covers all three nodes with total R_i + R_{i+2}. `Amended` also
/// sends the tie R_i = R_{i+1} (or R_{i+k} = R_{i+k-1}) on chains of three
/// or more pairs to the peel-both-ends branch; `AsPrinted` assigns nothing
/// further in that case.
enum class ChainRule { AsPrinted, Amended };

/// Weights on the pairs of one chain; pair_weights[p] belongs to
/// {node(p), node(p+1)}.
struct ChainRho {
  Chain chain;
  std::vector<Rational> pair_weights;

  std::map<NodeSet, Rational> as_map() const;
  Rational total() const;
};

/// Assigns pair weights along a chain from the rates of its nodes (R is the
/// full tuple, indexed by node). Throws std::invalid_argument on negative
/// rates.
ChainRho algorithm1(const Chain& chain, const RateTuple& r, ChainRule rule = ChainRule::Amended);

/// Which construction applied: 1 acyclic, 2 a single Hamiltonian cycle and
/// no 2-cycle, 3 at least one 2-cycle.
struct ConstructedRho {
  RhoAssignment rho;
  int proof_case = 0;
  bool certified = false;
};

/// Builds the clique weights without aborting on failure; `certified`
/// reports whether they meet the inner-bound rows. Throws
/// std::invalid_argument when G is outside the class, violates the
/// proper-subset condition, or R lies outside the MAIS region.
ConstructedRho build_rho(const Digraph& g, const RateTuple& r, ChainRule rule = ChainRule::Amended);

/// As build_rho, throwing ProofViolation if the weights fail to certify R.
RhoAssignment construct_rho(const Digraph& g, const RateTuple& r);

struct Prop7Report {
  bool holds = true;
  int vertices = 0;
  std::optional<RateTuple> construction_failure;
  std::optional<RateTuple> lp_failure;
};

/// Every MAIS vertex certified both by construct_rho and by the generic
/// clique-covering LP. Same preconditions as build_rho (minus the tuple).
Prop7Report verify_prop7(const Digraph& g);

/// Critical edges of a circular-class graph: exactly the edges on an induced
/// unicycle. Throws std::invalid_argument outside the class.
std::vector<Edge> critical_edges_circular(const Digraph& g);

}  // namespace critidx
