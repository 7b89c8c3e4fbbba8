#pragma once

#include <optional>
#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"

namespace kf {

enum class LpSense { le, ge, eq };
enum class LpStatus { optimal, infeasible, unbounded };

// Exact rational LP. Default variable bounds are [0, +inf); a disengaged
// lower bound makes the variable free.
struct LpProblem {
  bool maximize = true;
  RatVec c;
  std::vector<RatVec> rows;
  std::vector<LpSense> senses;
  RatVec rhs;
  std::vector<std::optional<Rat>> lo;
  std::vector<std::optional<Rat>> hi;
};

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  Rat objective;
  RatVec x;
};

// Two-phase simplex with Bland's rule; all arithmetic exact.
LpSolution lp_solve(const LpProblem& p);

// Is {x >= 0 : m x = b} nonempty?
bool lp_cone_feasible(const IntMat& m, const IntVec& b);

} // namespace kf
