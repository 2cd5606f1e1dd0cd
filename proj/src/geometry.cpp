#include "icx/geometry.hpp"

#include "icx/lp.hpp"

#include <stdexcept>

namespace icx {

std::vector<LatticePoint> integral_neighborhood(const RationalVector& x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("integral_neighborhood: empty vector");
  LatticePoint lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = floor_of(x[i]);
    hi[i] = ceil_of(x[i]);
  }
  std::vector<LatticePoint> out;
  for_each_box_point(lo, hi, [&](const LatticePoint& z) { out.push_back(z); });
  return out;
}

std::optional<RationalVector> hull_membership(
    const RationalVector& x, const std::vector<LatticePoint>& points) {
  if (points.empty()) return std::nullopt;
  const std::size_t n = x.size();
  for (const LatticePoint& p : points) {
    if (p.size() != n) {
      throw std::invalid_argument("hull_membership: dimension mismatch");
    }
  }
  // Cheap reject: x must lie in the bounding box of the points.
  for (std::size_t i = 0; i < n; ++i) {
    Int lo = points[0][i], hi = points[0][i];
    for (const LatticePoint& p : points) {
      if (p[i] < lo) lo = p[i];
      if (p[i] > hi) hi = p[i];
    }
    if (x[i] < Rational(lo) || x[i] > Rational(hi)) return std::nullopt;
  }

  const std::size_t m = points.size();
  LpProblem lp;
  lp.sense = LpSense::Maximize;
  lp.objective.assign(m, Rational(0));
  lp.nonneg.assign(m, true);
  lp.rows.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    LpRow row;
    row.kind = RowKind::Eq;
    row.rhs = x[i];
    row.coeff.reserve(m);
    for (const LatticePoint& p : points) row.coeff.emplace_back(p[i]);
    lp.rows.push_back(std::move(row));
  }
  LpRow sum_row;
  sum_row.kind = RowKind::Eq;
  sum_row.rhs = 1;
  sum_row.coeff.assign(m, Rational(1));
  lp.rows.push_back(std::move(sum_row));

  LpResult res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return res.solution;
}

bool in_convex_hull(const RationalVector& x,
                    const std::vector<LatticePoint>& points) {
  return hull_membership(x, points).has_value();
}

}  // namespace icx
