#include "exlab/lp.hpp"

#include <optional>

#include "exlab/error.hpp"

namespace exlab {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Dictionary form (Chvatal):  x_basic[r] = rhs[r] - sum_k coeff[r][k] * x_nonbasic[k]
//                             z = value + sum_k cost[k] * x_nonbasic[k]
// Variables are numbered: structural 0..n-1, slacks n..n+m-1, then an
// optional auxiliary variable for phase one.
class Dictionary {
 public:
  Dictionary(const LinearProgram& program) : n_(program.n_variables()) {
    std::vector<LinearConstraint> rows = program.constraints;
    if (program.unit_box) {
      for (std::size_t j = 0; j < n_; ++j) {
        LinearConstraint bound{std::vector<Rational>(n_, Rational(0)), Rational(1)};
        bound.row[j] = 1;
        rows.push_back(std::move(bound));
      }
    }
    m_ = rows.size();
    for (std::size_t j = 0; j < n_; ++j) nonbasic_.push_back(j);
    for (std::size_t r = 0; r < m_; ++r) {
      basic_.push_back(n_ + r);
      rhs_.push_back(rows[r].rhs);
      coeff_.push_back(rows[r].row);
    }
  }

  std::size_t n_structural() const { return n_; }
  std::size_t n_rows() const { return m_; }
  std::size_t pivots() const { return pivots_; }

  bool origin_feasible() const {
    for (const auto& b : rhs_) {
      if (b.sign() < 0) return false;
    }
    return true;
  }

  void set_objective(const std::vector<Rational>& costs_by_variable) {
    // Express the objective in terms of the current nonbasic variables.
    value_ = 0;
    cost_.assign(nonbasic_.size(), Rational(0));
    for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
      if (nonbasic_[k] < costs_by_variable.size()) cost_[k] = costs_by_variable[nonbasic_[k]];
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (basic_[r] >= costs_by_variable.size()) continue;
      const Rational& c = costs_by_variable[basic_[r]];
      if (c.is_zero()) continue;
      value_ += c * rhs_[r];
      for (std::size_t k = 0; k < nonbasic_.size(); ++k) cost_[k] -= c * coeff_[r][k];
    }
  }

  /// Runs simplex iterations to optimality. Returns false when unbounded.
  bool optimise() {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
        if (cost_[k].sign() > 0 && (!entering || nonbasic_[k] < nonbasic_[*entering])) entering = k;
      }
      if (!entering) return true;
      const auto leaving = ratio_test(*entering);
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  /// Phase one. Returns false iff the constraints are infeasible.
  bool make_feasible() {
    if (origin_feasible()) return true;
    aux_ = n_ + m_;
    nonbasic_.push_back(aux_);
    for (auto& row : coeff_) row.push_back(Rational(-1));
    std::vector<Rational> costs(aux_ + 1, Rational(0));
    costs[aux_] = -1;
    set_objective(costs);

    std::size_t worst = 0;
    for (std::size_t r = 1; r < m_; ++r) {
      if (rhs_[r] < rhs_[worst]) worst = r;
    }
    pivot(worst, nonbasic_.size() - 1);
    optimise();
    if (value_.sign() < 0) return false;

    // Drive the auxiliary variable out of the basis if it is still there at zero.
    for (std::size_t r = 0; r < m_; ++r) {
      if (basic_[r] != aux_) continue;
      for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
        if (!coeff_[r][k].is_zero()) {
          pivot(r, k);
          break;
        }
      }
    }
    for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
      if (nonbasic_[k] != aux_) continue;
      nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(k));
      for (auto& row : coeff_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(k));
      break;
    }
    return true;
  }

  Rational value() const { return value_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> out(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) {
      if (basic_[r] < n_) out[basic_[r]] = rhs_[r];
    }
    return out;
  }

  /// Shadow price of each row: minus the reduced cost of its slack.
  std::vector<Rational> duals() const {
    std::vector<Rational> out(m_, Rational(0));
    for (std::size_t k = 0; k < nonbasic_.size(); ++k) {
      const std::size_t var = nonbasic_[k];
      if (var >= n_ && var < n_ + m_) out[var - n_] = -cost_[k];
    }
    return out;
  }

 private:
  // Bland: minimum ratio, ties to the smallest basic variable index.
  std::optional<std::size_t> ratio_test(std::size_t entering) const {
    std::optional<std::size_t> leaving;
    Rational best;
    for (std::size_t r = 0; r < m_; ++r) {
      if (coeff_[r][entering].sign() <= 0) continue;
      Rational ratio = rhs_[r] / coeff_[r][entering];
      if (!leaving || ratio < best || (ratio == best && basic_[r] < basic_[*leaving])) {
        leaving = r;
        best = std::move(ratio);
      }
    }
    return leaving;
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational inv = Rational(1) / coeff_[row][col];
    auto& prow = coeff_[row];
    rhs_[row] *= inv;
    for (std::size_t k = 0; k < prow.size(); ++k) {
      if (k != col) prow[k] *= inv;
    }
    prow[col] = inv;

    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row) continue;
      const Rational factor = coeff_[r][col];
      if (factor.is_zero()) continue;
      rhs_[r] -= factor * rhs_[row];
      auto& target = coeff_[r];
      for (std::size_t k = 0; k < target.size(); ++k) {
        if (k != col && !prow[k].is_zero()) target[k] -= factor * prow[k];
      }
      target[col] = -(factor * inv);
    }

    const Rational factor = cost_[col];
    if (!factor.is_zero()) {
      value_ += factor * rhs_[row];
      for (std::size_t k = 0; k < cost_.size(); ++k) {
        if (k != col && !prow[k].is_zero()) cost_[k] -= factor * prow[k];
      }
      cost_[col] = -(factor * inv);
    }
    std::swap(basic_[row], nonbasic_[col]);
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t aux_ = 0;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<Rational>> coeff_;
  std::vector<Rational> cost_;
  Rational value_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution lp_solve(const LinearProgram& program) {
  const std::size_t n = program.n_variables();
  for (const auto& constraint : program.constraints) {
    if (constraint.row.size() != n) {
      throw Error("constraint row has " + std::to_string(constraint.row.size()) +
                  " coefficients, objective has " + std::to_string(n));
    }
  }

  Dictionary dict(program);
  LpSolution solution;
  if (!dict.make_feasible()) {
    solution.status = LpStatus::infeasible;
    solution.pivots = dict.pivots();
    return solution;
  }
  dict.set_objective(program.objective);
  if (!dict.optimise()) {
    solution.status = LpStatus::unbounded;
    solution.pivots = dict.pivots();
    return solution;
  }

  solution.status = LpStatus::optimal;
  solution.value = dict.value();
  solution.primal = dict.primal();
  auto duals = dict.duals();
  const std::size_t m = program.constraints.size();
  solution.row_duals.assign(duals.begin(), duals.begin() + static_cast<std::ptrdiff_t>(m));
  if (program.unit_box) {
    solution.bound_duals.assign(duals.begin() + static_cast<std::ptrdiff_t>(m), duals.end());
  } else {
    solution.bound_duals.assign(n, Rational(0));
  }
  solution.pivots = dict.pivots();
  return solution;
}

std::vector<std::string> verify_lp_certificate(const LinearProgram& program, const LpSolution& solution) {
  std::vector<std::string> problems;
  const std::size_t n = program.n_variables();
  const std::size_t m = program.constraints.size();
  if (solution.status != LpStatus::optimal) return {"solution is not optimal"};
  if (solution.primal.size() != n || solution.row_duals.size() != m || solution.bound_duals.size() != n) {
    return {"certificate dimensions do not match the program"};
  }

  Rational primal_value;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& w = solution.primal[j];
    if (w.sign() < 0) problems.push_back("w[" + std::to_string(j) + "] < 0");
    if (program.unit_box && w > Rational(1)) problems.push_back("w[" + std::to_string(j) + "] > 1");
    primal_value += program.objective[j] * w;
  }
  for (std::size_t r = 0; r < m; ++r) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) lhs += program.constraints[r].row[j] * solution.primal[j];
    if (lhs > program.constraints[r].rhs) problems.push_back("row " + std::to_string(r) + " violated");
  }
  if (primal_value != solution.value) problems.push_back("primal objective differs from reported value");

  Rational dual_value;
  for (std::size_t r = 0; r < m; ++r) {
    if (solution.row_duals[r].sign() < 0) problems.push_back("row dual " + std::to_string(r) + " < 0");
    dual_value += solution.row_duals[r] * program.constraints[r].rhs;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& z = solution.bound_duals[j];
    if (z.sign() < 0) problems.push_back("bound dual " + std::to_string(j) + " < 0");
    if (!program.unit_box && !z.is_zero()) problems.push_back("bound dual without a box bound");
    dual_value += z;
    Rational reduced = z;
    for (std::size_t r = 0; r < m; ++r) reduced += solution.row_duals[r] * program.constraints[r].row[j];
    if (reduced < program.objective[j]) {
      problems.push_back("dual constraint for variable " + std::to_string(j) + " violated");
    }
  }
  if (dual_value != solution.value) problems.push_back("dual objective differs from primal value");
  return problems;
}

}  // namespace exlab
