#include "critidx/lp.hpp"

#include <string>

namespace critidx {

namespace {

// Dense tableau in equality form. Column layout: structural variables, then
// one slack/surplus per inequality row, then one artificial per row that
// needs one. The last entry of every row is the right-hand side.
class Tableau {
 public:
  explicit Tableau(const LPProblem& p) : structural_(p.variables) {
    for (const LPRow& row : p.rows) {
      if (row.coeffs.size() != p.variables) {
        throw std::invalid_argument("LP row has " + std::to_string(row.coeffs.size()) + " coefficients, expected " +
                                    std::to_string(p.variables));
      }
    }
    if (p.objective && p.objective->size() != p.variables) throw std::invalid_argument("LP objective width mismatch");

    const std::size_t m = p.rows.size();
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    std::vector<Relation> rel(m);
    std::vector<bool> flip(m);
    for (std::size_t i = 0; i < m; ++i) {
      flip[i] = p.rows[i].rhs.is_negative();
      rel[i] = p.rows[i].relation;
      if (flip[i] && rel[i] != Relation::Equal) {
        rel[i] = rel[i] == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
      }
      if (rel[i] != Relation::Equal) ++slacks;
      if (rel[i] != Relation::LessEqual) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    columns_ = first_artificial_ + artificials;

    cells_.assign(m, std::vector<Rational>(columns_ + 1));
    basis_.assign(m, 0);
    std::size_t next_slack = structural_;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      auto& row = cells_[i];
      for (std::size_t j = 0; j < structural_; ++j) row[j] = flip[i] ? -p.rows[i].coeffs[j] : p.rows[i].coeffs[j];
      row[columns_] = flip[i] ? -p.rows[i].rhs : p.rows[i].rhs;
      if (rel[i] == Relation::LessEqual) {
        row[next_slack] = 1;
        basis_[i] = next_slack++;
      } else {
        if (rel[i] == Relation::GreaterEqual) row[next_slack++] = -1;
        row[next_artificial] = 1;
        basis_[i] = next_artificial++;
      }
    }
  }

  // Maximises cost.x over columns below `limit`, starting from the current
  // basis. Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t limit) {
    std::vector<Rational> reduced(columns_ + 1);
    for (std::size_t j = 0; j <= columns_; ++j) {
      Rational r = j < columns_ ? cost[j] : Rational();
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Rational& cb = cost[basis_[i]];
        if (!cb.is_zero() && !cells_[i][j].is_zero()) r -= cb * cells_[i][j];
      }
      reduced[j] = r;
    }
    while (true) {
      // Bland: lowest-index improving column, then lowest-index basic
      // variable among the minimum-ratio rows.
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (reduced[j].is_positive()) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = cells_.size();
      Rational best;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Rational& a = cells_[i][enter];
        if (!a.is_positive()) continue;
        Rational ratio = cells_[i][columns_] / a;
        if (leave == cells_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == cells_.size()) return false;
      pivot(leave, enter);
      Rational factor = reduced[enter];
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (!cells_[leave][j].is_zero()) reduced[j] -= factor * cells_[leave][j];
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    auto& pr = cells_[row];
    Rational inv = Rational(1) / pr[col];
    for (auto& v : pr) {
      if (!v.is_zero()) v *= inv;
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == row || cells_[i][col].is_zero()) continue;
      Rational factor = cells_[i][col];
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (!pr[j].is_zero()) cells_[i][j] -= factor * pr[j];
      }
    }
    basis_[row] = col;
  }

  // Pivots zero-valued artificials out of the basis; drops rows that are
  // combinations of the others.
  void expel_artificials() {
    for (std::size_t i = 0; i < cells_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!cells_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col < first_artificial_) {
        pivot(i, col);
        ++i;
      } else {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational total;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!cost[basis_[i]].is_zero()) total += cost[basis_[i]] * cells_[i][columns_];
    }
    return total;
  }

  std::vector<Rational> structural_solution() const {
    std::vector<Rational> x(structural_);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = cells_[i][columns_];
    }
    return x;
  }

  std::size_t columns() const { return columns_; }
  std::size_t first_artificial() const { return first_artificial_; }
  std::size_t structural() const { return structural_; }
  int pivots() const { return pivots_; }

 private:
  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  int pivots_ = 0;
};

// Phase one; false when the rows admit no nonnegative solution.
bool find_feasible_basis(Tableau& t) {
  std::vector<Rational> cost(t.columns());
  for (std::size_t j = t.first_artificial(); j < t.columns(); ++j) cost[j] = -1;
  t.optimize(cost, t.columns());
  if (t.value(cost).is_negative()) return false;
  t.expel_artificials();
  return true;
}

void check_witness(const LPProblem& p, const std::vector<Rational>& x) {
  if (!lp_satisfies(p, x)) throw std::logic_error("simplex produced a point violating its own rows");
}

}  // namespace

bool lp_satisfies(const LPProblem& problem, const std::vector<Rational>& x) {
  if (x.size() != problem.variables) return false;
  for (const Rational& v : x) {
    if (v.is_negative()) return false;
  }
  for (const LPRow& row : problem.rows) {
    Rational lhs;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!row.coeffs[j].is_zero() && !x[j].is_zero()) lhs += row.coeffs[j] * x[j];
    }
    switch (row.relation) {
      case Relation::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != row.rhs) return false;
        break;
    }
  }
  return true;
}

std::optional<LPSolution> lp_feasible(const LPProblem& problem) {
  Tableau t(problem);
  if (!find_feasible_basis(t)) return std::nullopt;
  LPSolution out{t.structural_solution(), Rational(), t.pivots()};
  check_witness(problem, out.x);
  return out;
}

LPSolution lp_maximize(const LPProblem& problem) {
  Tableau t(problem);
  if (!find_feasible_basis(t)) throw LPInfeasible();
  std::vector<Rational> cost(t.columns());
  if (problem.objective) {
    for (std::size_t j = 0; j < problem.variables; ++j) cost[j] = (*problem.objective)[j];
  }
  if (!t.optimize(cost, t.first_artificial())) throw LPUnbounded();
  LPSolution out{t.structural_solution(), t.value(cost), t.pivots()};
  check_witness(problem, out.x);
  return out;
}

}  // namespace critidx
