#pragma once

#include "icx/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace icx {

// A point of Z^n.  Lexicographic order is the built-in vector order.
using LatticePoint = std::vector<Int>;
// A point of Q^n.
using RationalVector = std::vector<Rational>;

RationalVector to_rational(const LatticePoint& p);

// Componentwise L-infinity distance.
Int linf_dist(const LatticePoint& a, const LatticePoint& b);
Int linf_norm(const LatticePoint& a);

LatticePoint add(const LatticePoint& a, const LatticePoint& b);
LatticePoint sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint scale(const LatticePoint& a, const Int& k);

Rational inner(const RationalVector& p, const LatticePoint& x);
Rational inner(const RationalVector& p, const RationalVector& x);

// Midpoint of two lattice points, as a rational vector.
RationalVector midpoint(const LatticePoint& a, const LatticePoint& b);

bool all_integral(const RationalVector& x);
LatticePoint rounded_down(const RationalVector& x);
LatticePoint rounded_up(const RationalVector& x);

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const;
};

// Box [lower, upper] with entries optionally infinite (nullopt = unbounded
// on that side).
struct IntegralBox {
  std::vector<std::optional<Int>> lower;  // nullopt = -inf
  std::vector<std::optional<Int>> upper;  // nullopt = +inf

  std::size_t dim() const { return lower.size(); }
  bool contains(const LatticePoint& x) const;
  bool contains(const RationalVector& x) const;
  void validate() const;  // throws std::invalid_argument if lower > upper
};

IntegralBox finite_box(const LatticePoint& lower, const LatticePoint& upper);
IntegralBox unbounded_box(std::size_t dim);

// Enumerates all lattice points of a finite box in lexicographic order and
// applies fn to each.
void for_each_box_point(const LatticePoint& lower, const LatticePoint& upper,
                        const std::function<void(const LatticePoint&)>& fn);

std::string point_to_string(const LatticePoint& p);
std::string vector_to_string(const RationalVector& p);

}  // namespace icx
