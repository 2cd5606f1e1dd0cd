#include "icx/lp.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace icx {

namespace {

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural + slack + artificial
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<std::size_t> basis;    // basis[i] = column basic in row i
  std::vector<Rational> red1, red2;  // reduced costs, phase 1 and 2
  Rational val1, val2;               // current objective values
  std::size_t first_artificial = 0;  // columns >= this are artificial

  void pivot(std::size_t pr, std::size_t pc) {
    Rational piv = a[pr][pc];
    for (auto& v : a[pr]) v /= piv;
    b[pr] /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || a[i][pc] == 0) continue;
      Rational f = a[i][pc];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[pr][j];
      a[i][pc] = 0;
      b[i] -= f * b[pr];
    }
    auto update_cost = [&](std::vector<Rational>& red, Rational& val) {
      if (red[pc] == 0) return;
      Rational f = red[pc];
      for (std::size_t j = 0; j < cols; ++j) red[j] -= f * a[pr][j];
      red[pc] = 0;
      val += f * b[pr];
    };
    update_cost(red1, val1);
    update_cost(red2, val2);
    basis[pr] = pc;
  }

  // Runs Bland's rule on the given cost row until optimal or unbounded.
  // allow_artificial permits artificial columns to enter (phase 1 only).
  bool optimize(std::vector<Rational>& red, bool allow_artificial) {
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!allow_artificial && j >= first_artificial) break;
        if (red[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return true;  // optimal
      std::size_t leave = rows;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        Rational ratio = b[i] / a[i][enter];
        if (leave == rows || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_solve(const LpProblem& problem) {
  const std::size_t nvars = problem.objective.size();
  if (problem.nonneg.size() != nvars) {
    throw std::invalid_argument("lp_solve: nonneg flag count mismatch");
  }
  for (const LpRow& r : problem.rows) {
    if (r.coeff.size() != nvars) {
      throw std::invalid_argument("lp_solve: row dimension mismatch");
    }
  }
  const bool maximize = problem.sense == LpSense::Maximize;

  // Column layout: one column per nonnegative variable, two (x+ , x-) per
  // free variable, then one slack per Le row, then artificials.
  std::vector<std::size_t> pos_col(nvars), neg_col(nvars, SIZE_MAX);
  std::size_t nc = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    pos_col[j] = nc++;
    if (!problem.nonneg[j]) neg_col[j] = nc++;
  }
  const std::size_t m = problem.rows.size();
  std::size_t n_slack = 0;
  for (const LpRow& r : problem.rows) {
    if (r.kind == RowKind::Le) ++n_slack;
  }
  const std::size_t slack_base = nc;
  const std::size_t art_base = nc + n_slack;

  Tableau t;
  t.rows = m;
  t.cols = art_base + m;  // reserve an artificial slot per row
  t.first_artificial = art_base;
  t.a.assign(m, std::vector<Rational>(t.cols, Rational(0)));
  t.b.assign(m, Rational(0));
  t.basis.assign(m, SIZE_MAX);
  t.red1.assign(t.cols, Rational(0));
  t.red2.assign(t.cols, Rational(0));

  std::size_t slack_idx = 0;
  std::size_t n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const LpRow& r = problem.rows[i];
    for (std::size_t j = 0; j < nvars; ++j) {
      t.a[i][pos_col[j]] = r.coeff[j];
      if (neg_col[j] != SIZE_MAX) t.a[i][neg_col[j]] = -r.coeff[j];
    }
    t.b[i] = r.rhs;
    std::size_t slack_col = SIZE_MAX;
    if (r.kind == RowKind::Le) {
      slack_col = slack_base + slack_idx++;
      t.a[i][slack_col] = 1;
    }
    if (t.b[i] < 0) {
      for (std::size_t j = 0; j < t.cols; ++j) t.a[i][j] = -t.a[i][j];
      t.b[i] = -t.b[i];
      slack_col = SIZE_MAX;  // negated slack cannot start basic
    }
    if (slack_col != SIZE_MAX) {
      t.basis[i] = slack_col;
    } else {
      std::size_t art_col = art_base + n_art++;
      t.a[i][art_col] = 1;
      t.basis[i] = art_col;
    }
  }
  t.cols = art_base + n_art;
  for (std::size_t i = 0; i < m; ++i) t.a[i].resize(t.cols);
  t.red1.resize(t.cols);
  t.red2.resize(t.cols);

  // Phase-1 cost: maximize -(sum of artificials).  Reduced costs relative
  // to the initial basis: artificial basics contribute their rows.
  t.val1 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] >= art_base) {
      for (std::size_t j = 0; j < t.cols; ++j) t.red1[j] += t.a[i][j];
      t.val1 -= t.b[i];
    }
  }
  for (std::size_t j = art_base; j < t.cols; ++j) t.red1[j] -= 1;
  // red1[j] currently equals (sum over artificial-basic rows of a_ij) minus
  // the phase-1 cost of column j itself; with cost -1 on artificials this is
  // c_j - z_j for the maximization of -(sum art).

  // Phase-2 cost row for the original objective.
  for (std::size_t j = 0; j < nvars; ++j) {
    Rational c = maximize ? problem.objective[j] : Rational(-problem.objective[j]);
    t.red2[pos_col[j]] = c;
    if (neg_col[j] != SIZE_MAX) t.red2[neg_col[j]] = -c;
  }
  t.val2 = 0;
  // Initial basis columns (slacks/artificials) have zero phase-2 cost, so
  // red2 is already correct relative to the basis.

  t.optimize(t.red1, /*allow_artificial=*/true);
  if (t.val1 != 0) {
    LpResult res;
    res.status = LpStatus::Infeasible;
    return res;
  }

  // Drive leftover artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows;) {
    if (t.basis[i] < art_base) {
      ++i;
      continue;
    }
    std::size_t piv_col = t.cols;
    for (std::size_t j = 0; j < art_base; ++j) {
      if (t.a[i][j] != 0) {
        piv_col = j;
        break;
      }
    }
    if (piv_col == t.cols) {
      t.a.erase(t.a.begin() + i);
      t.b.erase(t.b.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --t.rows;
    } else {
      t.pivot(i, piv_col);
      ++i;
    }
  }

  if (!t.optimize(t.red2, /*allow_artificial=*/false)) {
    LpResult res;
    res.status = LpStatus::Unbounded;
    return res;
  }

  LpResult res;
  res.status = LpStatus::Optimal;
  res.value = maximize ? t.val2 : Rational(-t.val2);
  res.solution.assign(nvars, Rational(0));
  std::vector<Rational> colval(t.cols, Rational(0));
  for (std::size_t i = 0; i < t.rows; ++i) colval[t.basis[i]] = t.b[i];
  for (std::size_t j = 0; j < nvars; ++j) {
    res.solution[j] = colval[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) res.solution[j] -= colval[neg_col[j]];
  }
  return res;
}

}  // namespace icx
