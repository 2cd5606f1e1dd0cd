#include "icx/lattice.hpp"

#include <stdexcept>

namespace icx {

RationalVector to_rational(const LatticePoint& p) {
  RationalVector r;
  r.reserve(p.size());
  for (const Int& c : p) r.emplace_back(c);
  return r;
}

Int linf_dist(const LatticePoint& a, const LatticePoint& b) {
  Int best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int d = a[i] - b[i];
    if (d < 0) d = -d;
    if (d > best) best = d;
  }
  return best;
}

Int linf_norm(const LatticePoint& a) {
  Int best = 0;
  for (const Int& c : a) {
    Int d = c < 0 ? Int(-c) : c;
    if (d > best) best = d;
  }
  return best;
}

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint scale(const LatticePoint& a, const Int& k) {
  LatticePoint r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

Rational inner(const RationalVector& p, const LatticePoint& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * Rational(x[i]);
  return s;
}

Rational inner(const RationalVector& p, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * x[i];
  return s;
}

RationalVector midpoint(const LatticePoint& a, const LatticePoint& b) {
  RationalVector m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = Rational(a[i] + b[i], 2);
  return m;
}

bool all_integral(const RationalVector& x) {
  for (const Rational& c : x) {
    if (!is_integer(c)) return false;
  }
  return true;
}

LatticePoint rounded_down(const RationalVector& x) {
  LatticePoint r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = floor_of(x[i]);
  return r;
}

LatticePoint rounded_up(const RationalVector& x) {
  LatticePoint r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = ceil_of(x[i]);
  return r;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const {
  // Collisions are harmless; equality is exact.  Reduce each coordinate
  // modulo a prime that fits in 64 bits before folding.
  static const Int kMod = Int("2305843009213693951");  // 2^61 - 1
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Int& c : p) {
    Int m = c % kMod;
    if (m < 0) m += kMod;
    auto v = m.convert_to<std::uint64_t>();
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool IntegralBox::contains(const LatticePoint& x) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (lower[i] && x[i] < *lower[i]) return false;
    if (upper[i] && x[i] > *upper[i]) return false;
  }
  return true;
}

bool IntegralBox::contains(const RationalVector& x) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (lower[i] && x[i] < Rational(*lower[i])) return false;
    if (upper[i] && x[i] > Rational(*upper[i])) return false;
  }
  return true;
}

void IntegralBox::validate() const {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("box bound dimensions differ");
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    if (lower[i] && upper[i] && *lower[i] > *upper[i]) {
      throw std::invalid_argument("box has lower bound above upper bound");
    }
  }
}

IntegralBox finite_box(const LatticePoint& lower, const LatticePoint& upper) {
  IntegralBox b;
  b.lower.reserve(lower.size());
  b.upper.reserve(upper.size());
  for (const Int& c : lower) b.lower.emplace_back(c);
  for (const Int& c : upper) b.upper.emplace_back(c);
  b.validate();
  return b;
}

IntegralBox unbounded_box(std::size_t dim) {
  IntegralBox b;
  b.lower.assign(dim, std::nullopt);
  b.upper.assign(dim, std::nullopt);
  return b;
}

void for_each_box_point(const LatticePoint& lower, const LatticePoint& upper,
                        const std::function<void(const LatticePoint&)>& fn) {
  const std::size_t n = lower.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (lower[i] > upper[i]) return;
  }
  LatticePoint cur = lower;
  while (true) {
    fn(cur);
    bool advanced = false;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < upper[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < n; ++j) cur[j] = lower[j];
        advanced = true;
        break;
      }
    }
    if (!advanced) return;
  }
}

std::string point_to_string(const LatticePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].str();
  }
  return s + ")";
}

std::string vector_to_string(const RationalVector& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += rational_to_string(p[i]);
  }
  return s + ")";
}

}  // namespace icx
