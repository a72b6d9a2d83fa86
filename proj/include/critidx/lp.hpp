#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "critidx/rational.hpp"

namespace critidx {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct LPRow {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Rows over `variables` nonnegative unknowns, with an optional objective to
/// maximise.
struct LPProblem {
  std::size_t variables = 0;
  std::vector<LPRow> rows;
  std::optional<std::vector<Rational>> objective;

  void add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs) {
    rows.push_back({std::move(coeffs), relation, rhs});
  }
};

struct LPSolution {
  std::vector<Rational> x;
  Rational objective;
  int pivots = 0;
};

class LPInfeasible : public std::runtime_error {
 public:
  LPInfeasible() : std::runtime_error("linear program is infeasible") {}
};

class LPUnbounded : public std::runtime_error {
 public:
  LPUnbounded() : std::runtime_error("linear program is unbounded") {}
};

/// Exact phase-one simplex with Bland's rule. On success the witness
/// satisfies every row exactly. Throws std::invalid_argument on a row whose
/// width differs from `variables`.
std::optional<LPSolution> lp_feasible(const LPProblem& problem);

/// Exact two-phase simplex maximising the objective (absent objective is
/// treated as zero). Throws LPInfeasible or LPUnbounded.
LPSolution lp_maximize(const LPProblem& problem);

/// True iff x >= 0 and x satisfies every row of the problem.
bool lp_satisfies(const LPProblem& problem, const std::vector<Rational>& x);

}  // namespace critidx
