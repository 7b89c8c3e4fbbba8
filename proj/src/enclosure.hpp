#pragma once

// Directed rational enclosures for the irrational quantities that appear in
// the certified bounds: square roots, pi, and unit-ball volumes. All
// comparisons against enclosures are done so that a reported "true" is a
// proof; when an interval straddles the comparison the caller either raises
// precision or reports interval_too_wide.

#include "bigint.hpp"

namespace kf {

struct RatIv {
  Rat lo, hi;

  bool is_point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  double mid_double() const { return (Rat((lo + hi) / 2)).get_d(); }
};

inline RatIv iv_point(const Rat& x) { return {x, x}; }

// Arithmetic for nonnegative operands (all uses here are nonnegative).
RatIv iv_add(const RatIv& a, const RatIv& b);
RatIv iv_mul_nonneg(const RatIv& a, const RatIv& b);
RatIv iv_div_pos(const RatIv& a, const RatIv& b);
RatIv iv_scale(const RatIv& a, const Rat& c); // c >= 0
RatIv iv_pow_nonneg(const RatIv& a, unsigned long e);

// Enclosure of sqrt(x), x >= 0 rational, absolute+relative width ~ 2^-bits.
// Exact point interval when x is a perfect square of a rational.
RatIv sqrt_iv(const Rat& x, unsigned bits);

// Enclosure of pi with width <= 2^-bits.
RatIv pi_iv(unsigned bits);

// Volume of the k-dimensional Euclidean unit ball, k >= 0.
// omega_k = pi^{k/2}/Gamma(k/2+1); exact rational for k <= 1.
RatIv ball_volume(unsigned k, unsigned bits);

// Largest integer u with u <= c + sqrt(r) (r >= 0), exact.
Int floor_c_plus_sqrt(const Rat& c, const Rat& r);
// Smallest integer u with u >= c - sqrt(r) (r >= 0), exact.
Int ceil_c_minus_sqrt(const Rat& c, const Rat& r);

} // namespace kf
