#include "geom_checks.hpp"

#include "error.hpp"

namespace kf {

MinkowskiReport minkowski_check(const LatticeBasis& l, const MinimaProfile& p, int bits) {
  std::size_t k = l.k;
  if (k == 0 || p.lambda_sq.size() != k)
    fail(errc::bad_input, "minima profile does not match lattice rank");
  Int prod(1);
  for (const Int& s : p.lambda_sq) prod *= s;
  Int four_k = pow_int(Int(4), (unsigned long)k);
  Int kfact = factorial((unsigned long)k);
  Rat lhs_sq = rat(four_k * l.det_sq, kfact * kfact); // ((2^k/k!) det)^2
  Rat rhs_sq = Rat(four_k * l.det_sq);                // (2^k det)^2

  for (int b = bits;; b *= 2) {
    RatIv w = ball_volume((unsigned)k, (unsigned)b);
    Rat mid_lo = Rat(prod) * w.lo * w.lo;
    Rat mid_hi = Rat(prod) * w.hi * w.hi;
    bool lower_ok = lhs_sq <= mid_lo;
    bool lower_bad = lhs_sq > mid_hi;
    bool upper_ok = mid_hi <= rhs_sq;
    bool upper_bad = mid_lo > rhs_sq;
    if ((lower_ok || lower_bad) && (upper_ok || upper_bad)) {
      MinkowskiReport r;
      r.pass = lower_ok && upper_ok;
      r.slack_lower_sq = mid_lo / lhs_sq;
      r.slack_upper_sq = rhs_sq / mid_hi;
      return r;
    }
    if (b > 4096) fail(errc::interval_too_wide, "ball volume enclosure too wide");
  }
}

MuBounds jarnik_mu_bounds(const MinimaProfile& p, int bits) {
  if (p.lambda_sq.empty()) fail(errc::bad_input, "empty minima profile");
  if (bits < 30) bits = 30;
  RatIv last = sqrt_iv(Rat(p.lambda_sq.back()), (unsigned)bits);
  Rat sum_hi(0);
  for (const Int& s : p.lambda_sq) sum_hi += sqrt_iv(Rat(s), (unsigned)bits).hi;
  return {last.lo / 2, sum_hi / 2};
}

std::size_t minima_gap_check(const MinimaProfile& p, const Rat& lam, std::size_t m,
                             std::size_t n, const Int& det_sq, int bits) {
  if (n <= m + 1) fail(errc::bad_input, "need n - m >= 2");
  std::size_t k = n - m;
  if (p.lambda_sq.size() != k) fail(errc::bad_input, "minima profile does not match n - m");
  if (lam <= 0) fail(errc::bad_parameter, "lam must be positive");
  if (det_sq <= 0) fail(errc::bad_input, "det_sq must be positive");

  // lambda_k > lam det^{1/k}, compared on 2k-th powers.
  Rat pre_lhs = pow_rat(Rat(p.lambda_sq[k - 1]), (unsigned long)k);
  Rat pre_rhs = pow_rat(lam, 2 * (unsigned long)k) * Rat(det_sq);
  if (!(pre_lhs > pre_rhs))
    fail(errc::precondition_violated, "lambda_{n-m} <= lam det^{1/(n-m)}");

  // Target inequality raised to the power 2k(k-1):
  //   (lambda_{i+1}^2/lambda_i^2)^{k(k-1)} > 2^{-4k} omega_k^4 lam^{4k}.
  Rat coef = pow_rat(lam, 4 * (unsigned long)k) / Rat(pow_int(Int(2), 4 * (unsigned long)k));
  unsigned long e = (unsigned long)(k * (k - 1));
  for (int b = bits;; b *= 2) {
    RatIv w = ball_volume((unsigned)k, (unsigned)b);
    RatIv w2 = iv_mul_nonneg(w, w);
    RatIv w4 = iv_mul_nonneg(w2, w2);
    Rat y_lo = coef * w4.lo, y_hi = coef * w4.hi;
    bool undecided = false;
    for (std::size_t i = 1; i < k; ++i) {
      Rat x = pow_rat(rat(p.lambda_sq[i], p.lambda_sq[i - 1]), e);
      if (x > y_hi) return i;
      if (x >= y_lo) undecided = true;
    }
    if (!undecided)
      fail(errc::internal, "no minima gap index certified despite valid precondition");
    if (b > 4096) fail(errc::interval_too_wide, "gap comparison enclosure too wide");
  }
}

} // namespace kf
