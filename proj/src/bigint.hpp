#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "error.hpp"

namespace kf {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) fail(errc::bad_parameter, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

// floor(a/b) for b != 0
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& q) { return fdiv(q.get_num(), q.get_den()); }

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// nearest integer, ties toward +infinity
inline Int round_rat(const Rat& q) { return floor_rat(q + rat(1, 2)); }

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
  if (n < 0) fail(errc::bad_parameter, "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// g = gcd(a,b) = s*a + t*b
inline Int gcdext(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  return rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

inline Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline Int gcd_vec(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

} // namespace kf
