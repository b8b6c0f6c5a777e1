#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "exlab/rational.hpp"

namespace exlab {

/// row . w <= rhs
struct LinearConstraint {
  std::vector<Rational> row;
  Rational rhs;
};

/// maximise objective . w subject to every constraint and w >= 0, plus
/// w <= 1 coordinatewise when `unit_box` is set.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  bool unit_box = true;

  std::size_t n_variables() const { return objective.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> primal;
  /// One multiplier per entry of LinearProgram::constraints.
  std::vector<Rational> row_duals;
  /// One multiplier per variable for its w <= 1 bound (zeros without a box).
  std::vector<Rational> bound_duals;
  std::size_t pivots = 0;
};

/// Exact two-phase simplex on a rational dictionary with Bland's rule.
/// Throws exlab::Error if row lengths disagree with the objective.
LpSolution lp_solve(const LinearProgram& program);

/// Rechecks an optimal solution from scratch: primal feasibility, dual
/// feasibility (y >= 0, z >= 0, A^T y + z >= c) and equality of primal and
/// dual objectives. Returns one message per failed condition.
std::vector<std::string> verify_lp_certificate(const LinearProgram& program, const LpSolution& solution);

}  // namespace exlab
