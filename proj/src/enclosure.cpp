#include "enclosure.hpp"

namespace kf {

RatIv iv_add(const RatIv& a, const RatIv& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatIv iv_mul_nonneg(const RatIv& a, const RatIv& b) {
  if (a.lo < 0 || b.lo < 0) fail(errc::internal, "iv_mul_nonneg: negative operand");
  return {a.lo * b.lo, a.hi * b.hi};
}

RatIv iv_div_pos(const RatIv& a, const RatIv& b) {
  if (a.lo < 0 || b.lo <= 0) fail(errc::internal, "iv_div_pos: bad operand");
  return {a.lo / b.hi, a.hi / b.lo};
}

RatIv iv_scale(const RatIv& a, const Rat& c) {
  if (c < 0) fail(errc::internal, "iv_scale: negative scale");
  return {a.lo * c, a.hi * c};
}

RatIv iv_pow_nonneg(const RatIv& a, unsigned long e) {
  if (a.lo < 0) fail(errc::internal, "iv_pow_nonneg: negative operand");
  return {pow_rat(a.lo, e), pow_rat(a.hi, e)};
}

RatIv sqrt_iv(const Rat& x, unsigned bits) {
  if (x < 0) fail(errc::bad_parameter, "sqrt_iv of negative");
  if (x == 0) return iv_point(Rat(0));
  const Int& p = x.get_num();
  const Int& q = x.get_den();
  // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits for the requested resolution.
  Int pq = p * q;
  Int scaled = pq << (2 * bits);
  Int r = isqrt(scaled);
  Rat denom = rat(q << bits, 1);
  if (r * r == scaled) {
    Rat v = rat(r, 1) / denom;
    return iv_point(v);
  }
  return {rat(r, 1) / denom, rat(r + 1, 1) / denom};
}

// Machin: pi = 16*atan(1/5) - 4*atan(1/239). Alternating series give directed
// partial-sum bounds; everything stays rational.
static void atan_inv_bounds(unsigned long m, unsigned terms, Rat& lo, Rat& hi) {
  // atan(1/m) = sum_{j>=0} (-1)^j / ((2j+1) m^{2j+1})
  Rat s = 0;
  Rat lo_part = 0, hi_part = 0;
  bool have_lo = false, have_hi = false;
  Int mpow = m; // m^{2j+1}
  Int msq = Int(m) * Int(m);
  for (unsigned j = 0; j < terms; ++j) {
    Rat term = rat(1, Int((2 * j + 1)) * mpow);
    if (j % 2 == 0) s += term; else s -= term;
    // after adding a positive term the partial sum is an upper bound,
    // after subtracting it is a lower bound
    if (j % 2 == 0) { hi_part = s; have_hi = true; }
    else { lo_part = s; have_lo = true; }
    mpow *= msq;
  }
  if (!have_lo || !have_hi) fail(errc::internal, "atan bounds need >= 2 terms");
  lo = lo_part;
  hi = hi_part;
}

RatIv pi_iv(unsigned bits) {
  // term sizes shrink by factors 25 resp. 239^2; pick enough terms.
  unsigned t5 = bits / 4 + 4;
  unsigned t239 = bits / 15 + 3;
  if (t5 % 2) ++t5;     // even term counts so both directed bounds exist
  if (t239 % 2) ++t239;
  Rat lo5, hi5, lo239, hi239;
  atan_inv_bounds(5, t5, lo5, hi5);
  atan_inv_bounds(239, t239, lo239, hi239);
  return {16 * lo5 - 4 * hi239, 16 * hi5 - 4 * lo239};
}

RatIv ball_volume(unsigned k, unsigned bits) {
  if (k == 0) return iv_point(Rat(1));
  if (k == 1) return iv_point(Rat(2));
  // even k: pi^{k/2} / (k/2)!    odd k: 2^{(k+1)/2} pi^{(k-1)/2} / k!!
  unsigned long ppow = k / 2;
  Rat coeff;
  if (k % 2 == 0) {
    coeff = rat(1, factorial(k / 2));
  } else {
    Int dfact;
    mpz_2fac_ui(dfact.get_mpz_t(), k); // k!!
    coeff = rat(Int(1) << ((k + 1) / 2), dfact);
  }
  RatIv p = pi_iv(bits + 8);
  RatIv ppk = iv_pow_nonneg(p, ppow);
  return iv_scale(ppk, coeff);
}

Int floor_c_plus_sqrt(const Rat& c, const Rat& r) {
  if (r < 0) fail(errc::bad_parameter, "floor_c_plus_sqrt: negative radicand");
  // want max integer u with u - c <= sqrt(r)
  RatIv s = sqrt_iv(r, 8);
  Int u = floor_rat(c + s.hi);
  auto ok = [&](const Int& v) {
    Rat d = rat(v, 1) - c;
    if (d <= 0) return true;
    return d * d <= r;
  };
  while (!ok(u)) --u;
  while (ok(u + 1)) ++u;
  return u;
}

Int ceil_c_minus_sqrt(const Rat& c, const Rat& r) {
  if (r < 0) fail(errc::bad_parameter, "ceil_c_minus_sqrt: negative radicand");
  // want min integer u with c - u <= sqrt(r)
  RatIv s = sqrt_iv(r, 8);
  Int u = ceil_rat(c - s.hi);
  auto ok = [&](const Int& v) {
    Rat d = c - rat(v, 1);
    if (d <= 0) return true;
    return d * d <= r;
  };
  while (!ok(u)) ++u;
  while (ok(u - 1)) --u;
  return u;
}

} // namespace kf
