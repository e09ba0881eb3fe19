#pragma once

#include <cstddef>

#include "dsmt/chebyshev.hpp"

namespace dsmt::continuous {

/// The proposition "at least lo and at most hi", x̀∩ý with x = lo, y = hi.
/// hi < lo is allowed and encodes contradictory evidence.
struct GeneralizedInterval {
  double lo = -1.0;
  double hi = 1.0;

  /// (hi − lo)/2: negative for contradiction, zero for exact, positive for imprecise.
  double width() const noexcept { return (hi - lo) / 2.0; }
  double center() const noexcept { return (lo + hi) / 2.0; }

  /// Membership of (a, b) in the increasing set {(a, b) : a <= b, lo <= b, a <= hi}.
  bool contains(double a, double b) const noexcept { return a <= b && lo <= b && a <= hi; }

  friend bool operator==(const GeneralizedInterval&, const GeneralizedInterval&) = default;
};

/// Conjunction of two generalized intervals: (max lo, min hi).
constexpr GeneralizedInterval interval_meet(const GeneralizedInterval& a, const GeneralizedInterval& b) noexcept {
  return {a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
}

/// Bel(x̀∩ý) integrates the mass of every ù∩v́ with u >= x and v <= y.
inline constexpr Corner kBeliefCorner{Side::upper, Side::lower};

/// The belief surface of m: a series whose value at (lo, hi) is Bel(x̀∩ý).
inline ChebDensity belief_surface(const ChebDensity& m) { return cumulative(m, kBeliefCorner); }

/// Bel(iv) = ∫_{u=lo}^{1} ∫_{v=-1}^{hi} m(u, v) dv du.
/// Throws std::domain_error when lo or hi is outside [-1,1].
double belief(const ChebDensity& m, const GeneralizedInterval& iv);

/// Conjunctive fusion of two bba densities of equal degree N.
///
/// Meeting x̀1∩ý1 with x̀2∩ý2 yields x̀∩ý with x = max(x1, x2) and
/// y = min(y1, y2), so the fused density at (x, y) collects four families of
/// pairs, according to which operand supplies each coordinate:
///
///   m1(x,y)·F2(x,y)   x1 = x, y1 = y;  x2 <= x, y2 >= y
///   F1(x,y)·m2(x,y)   x2 = x, y2 = y;  x1 <= x, y1 >= y
///   P1(x,y)·Q2(x,y)   y1 = y, x2 = x;  x1 <= x, y2 >= y
///   Q1(x,y)·P2(x,y)   x1 = x, y2 = y;  x2 <= x, y1 >= y
///
/// with P(x,y) = ∫_{-1}^{x} m(u,y) du, Q(x,y) = ∫_{y}^{1} m(x,v) dv and
/// F(x,y) = ∫_{-1}^{x} ∫_{y}^{1} m(u,v) dv du. In the last two families the
/// integrand m1(x1,y)·m2(x,y2) separates into a factor in x1 alone and one in
/// y2 alone, which is why each double integral is a product of two single
/// integrals. Pairs where both operands share a coordinate have measure zero.
///
/// The four terms are evaluated on the 2N Lobatto grid, summed pointwise and
/// transformed back, then truncated to degree N.
///
/// Throws std::invalid_argument on a degree mismatch.
ChebDensity fuse(const ChebDensity& m1, const ChebDensity& m2);

/// exp(−(x − cx)² − (y − cy)²).
Function2d gaussian_bump(double cx, double cy);

/// Affine change of variable between [a, b] and the reference [-1, 1].
struct AffineDomain {
  double a = -1.0;
  double b = 1.0;

  double to_reference(double x) const noexcept { return (2.0 * x - a - b) / (b - a); }
  double from_reference(double s) const noexcept { return 0.5 * (a + b) + 0.5 * (b - a) * s; }
  /// dx/ds.
  double jacobian() const noexcept { return 0.5 * (b - a); }
};

/// Fits a density given on [a,b]² as a reference density on [-1,1]² with the
/// same integrals: m_ref(s, t) = f(x(s), y(t))·J². Throws std::invalid_argument
/// when b <= a.
ChebDensity fit_on(const Function2d& f, const AffineDomain& domain, std::size_t degree);

/// Bel of an interval expressed in [a,b] coordinates.
double belief_on(const ChebDensity& m, const AffineDomain& domain, const GeneralizedInterval& iv);

}  // namespace dsmt::continuous
