#pragma once

#include "icx/lattice.hpp"
#include "icx/rational.hpp"

#include <vector>

namespace icx {

// Exact-rational simplex for small dense problems.  Two-phase primal with
// Bland's anti-cycling rule (lowest column index enters; ties in the ratio
// test resolved by lowest basic-variable index), so the returned basic
// solution is deterministic.

enum class LpSense { Maximize, Minimize };
enum class RowKind { Eq, Le };

struct LpRow {
  std::vector<Rational> coeff;
  RowKind kind = RowKind::Le;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector solution;  // one entry per original variable
};

struct LpProblem {
  LpSense sense = LpSense::Maximize;
  RationalVector objective;
  std::vector<LpRow> rows;
  // nonneg[j] = true constrains x_j >= 0; false leaves x_j free.
  std::vector<bool> nonneg;
};

LpResult lp_solve(const LpProblem& problem);

}  // namespace icx
