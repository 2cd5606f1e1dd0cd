#pragma once

#include "icx/lattice.hpp"

#include <optional>
#include <vector>

namespace icx {

// Integer points z with floor(x) <= z <= ceil(x) componentwise, in
// lexicographic order.  Size is 2^k for k fractional coordinates.
std::vector<LatticePoint> integral_neighborhood(const RationalVector& x);

// Exact convex-combination weights expressing x over the given points, or
// nullopt when x is outside their convex hull.  Weights sum to 1, are
// nonnegative, and reconstruct x exactly.
std::optional<RationalVector> hull_membership(
    const RationalVector& x, const std::vector<LatticePoint>& points);

bool in_convex_hull(const RationalVector& x,
                    const std::vector<LatticePoint>& points);

}  // namespace icx
