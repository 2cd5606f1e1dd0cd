#pragma once

#include "icx/geometry.hpp"
#include "icx/lattice.hpp"

#include <optional>
#include <vector>

namespace icx {

// Explicit finite subset of Z^n.  Points are kept sorted lexicographically
// and deduplicated; an empty point list is a tagged empty set.
struct DiscreteSet {
  int dim = 0;
  std::vector<LatticePoint> points;

  bool empty() const { return points.empty(); }
  bool contains(const LatticePoint& p) const;
};

DiscreteSet make_set(int dim, std::vector<LatticePoint> points);

struct HoleFreeResult {
  bool hole_free = false;
  std::optional<LatticePoint> hole;  // lexicographically first hole
};

// True iff every integer point of conv(S) belongs to S.
HoleFreeResult is_hole_free(const DiscreteSet& s);

struct PointPair {
  LatticePoint a, b;  // a < b lexicographically
};

struct SetConvexityResult {
  bool integrally_convex = false;
  std::optional<PointPair> witness;  // lexicographically smallest violating pair
};

// Midpoint criterion: for every pair y, y' in S at L-infinity distance >= 2,
// the midpoint must lie in the convex hull of S restricted to its integral
// neighborhood.
SetConvexityResult is_integrally_convex_set(const DiscreteSet& s);

// Operations of the set algebra.  Results are exact, deduplicated, and may
// be empty.
DiscreteSet shift_set(const DiscreteSet& s, const LatticePoint& b);
DiscreteSet invert_set(const DiscreteSet& s, const std::vector<int>& signs);
DiscreteSet permute_set(const DiscreteSet& s, const std::vector<int>& perm);
DiscreteSet scale_set(const DiscreteSet& s, const Int& alpha);
// (alpha * conv(S)) intersected with Z^n, by bounding-box scan and exact
// hull membership.
DiscreteSet dilate_set(const DiscreteSet& s, const Int& alpha);
DiscreteSet restrict_set(const DiscreteSet& s, const std::vector<int>& keep);
DiscreteSet project_set(const DiscreteSet& s, const std::vector<int>& keep);
// Splits coordinate i into group_sizes[i] coordinates that sum to the old
// value; the result is clipped to [lower, upper] to stay finite.
DiscreteSet split_set(const DiscreteSet& s, const std::vector<int>& group_sizes,
                      const LatticePoint& lower, const LatticePoint& upper);
DiscreteSet aggregate_set(const DiscreteSet& s,
                          const std::vector<std::vector<int>>& partition);
DiscreteSet intersect_sets(const DiscreteSet& a, const DiscreteSet& b);
DiscreteSet minkowski_sum(const DiscreteSet& a, const DiscreteSet& b);

// For alpha = 1..alpha_max, whether the alpha-dilation of conv(S) is a
// box-integer polyhedron (equivalently, whether its integer points form an
// integrally convex set).  A false entry certifies conv(S) is not box-TDI;
// all-true is only "no violation found up to alpha_max".
// Throws std::invalid_argument when S itself is not integrally convex.
std::vector<bool> box_integrality_probe(const DiscreteSet& s, int alpha_max);

}  // namespace icx
