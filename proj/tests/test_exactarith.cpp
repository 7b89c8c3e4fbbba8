#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enclosure.hpp"
#include "error.hpp"
#include "hnf.hpp"
#include "lp.hpp"
#include "matrix.hpp"
#include "smith.hpp"

using namespace kf;

TEST_CASE("rational helpers") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, 4) == rat(-1, 2));
  CHECK(rat(3, -6) == rat(-1, 2));
  CHECK(floor_rat(rat(-7, 2)) == -4);
  CHECK(ceil_rat(rat(-7, 2)) == -3);
  CHECK(floor_rat(rat(7, 2)) == 3);
  CHECK(round_rat(rat(5, 2)) == 3);
  CHECK(round_rat(rat(-5, 2)) == -2);
  CHECK_THROWS_AS(rat(1, 0), error);
}

TEST_CASE("integer helpers") {
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(15)) == 3);
  CHECK(isqrt(Int(16)) == 4);
  CHECK(gcd(Int(12), Int(18)) == 6);
  CHECK(lcm(Int(4), Int(6)) == 12);
  Int s, t;
  Int g = gcdext(Int(240), Int(46), s, t);
  CHECK(g == 2);
  CHECK(s * 240 + t * 46 == g);
  CHECK(pow_int(Int(3), 4) == 81);
  CHECK(factorial(5) == 120);
  CHECK(gcd_vec({Int(6), Int(10), Int(15)}) == 1);
  CHECK(gcd_vec({Int(6), Int(10)}) == 2);
  CHECK(gcd_vec({}) == 0);
}

TEST_CASE("sqrt enclosure") {
  RatIv r = sqrt_iv(rat(2), 64);
  CHECK(r.lo * r.lo <= 2);
  CHECK(r.hi * r.hi >= 2);
  CHECK(r.width() <= rat(Int(1), pow_int(Int(2), 60)));

  // perfect squares give point intervals
  CHECK(sqrt_iv(rat(9, 4), 64).is_point());
  CHECK(sqrt_iv(rat(9, 4), 64).lo == rat(3, 2));
  CHECK(sqrt_iv(rat(0), 64).lo == 0);
}

TEST_CASE("pi and ball volumes") {
  RatIv p = pi_iv(64);
  CHECK(p.lo > rat(314159265, 100000000));
  CHECK(p.hi < rat(314159266, 100000000));
  CHECK(p.width() <= rat(Int(1), pow_int(Int(2), 64)));

  CHECK(ball_volume(0, 64).lo == 1);
  CHECK(ball_volume(1, 64).lo == 2); // exact
  RatIv w2 = ball_volume(2, 64);     // pi
  CHECK(w2.lo > rat(31415, 10000));
  CHECK(w2.hi < rat(31416, 10000));
  RatIv w3 = ball_volume(3, 64); // 4 pi / 3
  CHECK(w3.lo > rat(41887, 10000));
  CHECK(w3.hi < rat(41889, 10000));
  RatIv w4 = ball_volume(4, 64); // pi^2 / 2
  CHECK(w4.lo > rat(49348, 10000));
  CHECK(w4.hi < rat(49349, 10000));
}

TEST_CASE("interval arithmetic keeps direction") {
  RatIv a{rat(1, 3), rat(1, 2)};
  RatIv b{rat(2), rat(3)};
  RatIv s = iv_add(a, b);
  CHECK(s.lo == rat(7, 3));
  CHECK(s.hi == rat(7, 2));
  RatIv m = iv_mul_nonneg(a, b);
  CHECK(m.lo == rat(2, 3));
  CHECK(m.hi == rat(3, 2));
  RatIv d = iv_div_pos(a, b);
  CHECK(d.lo == rat(1, 9));
  CHECK(d.hi == rat(1, 4));
  RatIv p = iv_pow_nonneg(a, 2);
  CHECK(p.lo == rat(1, 9));
  CHECK(p.hi == rat(1, 4));
}

TEST_CASE("exact floor of c + sqrt(r)") {
  CHECK(floor_c_plus_sqrt(rat(0), rat(2)) == 1);
  CHECK(floor_c_plus_sqrt(rat(0), rat(4)) == 2);
  CHECK(floor_c_plus_sqrt(rat(1, 2), rat(9, 4)) == 2); // 1/2 + 3/2 = 2
  CHECK(floor_c_plus_sqrt(rat(-5), rat(2)) == -4);     // -5 + 1.41... -> -4
  CHECK(ceil_c_minus_sqrt(rat(0), rat(2)) == -1);
  CHECK(ceil_c_minus_sqrt(rat(1, 2), rat(9, 4)) == -1);
  CHECK(ceil_c_minus_sqrt(rat(5), rat(2)) == 4);
}

TEST_CASE("matrix basics") {
  IntMat a{{1, 2}, {3, 4}};
  CHECK(det_bareiss(a) == -2);
  CHECK(rank(a) == 2);
  IntMat sing{{1, 2}, {2, 4}};
  CHECK(det_bareiss(sing) == 0);
  CHECK(rank(sing) == 1);

  IntMat g = gram(IntMat{{0, 1, 2}, {1, 1, 0}});
  CHECK(g == IntMat{{5, 1}, {1, 2}});
  CHECK(det_bareiss(g) == 9);

  auto inv = inverse_rational(a);
  REQUIRE(inv.has_value());
  RatVec x = *solve_rational(a, RatVec{rat(1), rat(1)});
  CHECK(x[0] == rat(-1));
  CHECK(x[1] == rat(1));
  CHECK_FALSE(solve_rational(sing, RatVec{rat(1), rat(1)}).has_value());

  CHECK(lex_less(IntVec{1, -1}, IntVec{1, 0}));
  CHECK_FALSE(lex_less(IntVec{1, 0}, IntVec{1, 0}));
}

TEST_CASE("column hermite form") {
  IntMat a{{0, 1, 2}, {1, 1, 0}};
  HnfResult h = hnf(a);
  // M U = [H | 0]
  IntMat mu = mul(a, h.U);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.rows; ++j) CHECK(mu(i, j) == h.H(i, j));
    for (std::size_t j = a.rows; j < a.cols; ++j) CHECK(mu(i, j) == 0);
  }
  Int du = det_bareiss(h.U);
  CHECK((du == 1 || du == -1));
  CHECK(h.H(0, 0) > 0);
  CHECK(h.H(1, 1) > 0);
  CHECK(h.H(0, 1) == 0); // lower triangular
  CHECK_THROWS_AS(hnf(IntMat{{1, 2}, {2, 4}}), error);
}

TEST_CASE("row hermite form is canonical") {
  IntMat b{{4, 6}, {2, 2}};
  IntMat h = row_hnf(b);
  CHECK(h == IntMat{{2, 0}, {0, 2}});
  // invariant under row operations
  IntMat b2{{6, 8}, {2, 2}};
  CHECK(row_hnf(b2) == h);
  // zero rows dropped
  IntMat c{{1, 2, 3}, {2, 4, 6}};
  IntMat hc = row_hnf(c);
  CHECK(hc.rows == 1);
  CHECK(hc == IntMat{{1, 2, 3}});
}

TEST_CASE("kernel lattice") {
  IntMat k = kernel_lattice(IntMat{{2, -2, 1}});
  CHECK(k.rows == 2);
  for (std::size_t i = 0; i < k.rows; ++i)
    CHECK(2 * k(i, 0) - 2 * k(i, 1) + k(i, 2) == 0);
  CHECK(gram_det(k) == 9); // det of the complement equals the vector norm
  CHECK(minor_gcd(k) == 1);

  IntMat k2 = kernel_lattice(IntMat{{1, 2, 3}});
  CHECK(k2.rows == 2);
  CHECK(gram_det(k2) == 14);

  // full-rank matrix has empty kernel
  CHECK(kernel_lattice(IntMat{{1, 0}, {0, 1}}).rows == 0);
}

TEST_CASE("minor gcd and gram det") {
  CHECK(minor_gcd(IntMat{{2, 4, 6}}) == 2);
  CHECK(minor_gcd(IntMat{{0, 1, 2}, {1, 1, 0}}) == 1);
  CHECK(minor_gcd(IntMat{{1, 2, 3}, {2, 4, 6}}) == 0); // rank deficient
  CHECK(gram_det(IntMat{{3, 5}}) == 34);
  CHECK(gram_det(IntMat{{0, 1, 2}, {1, 1, 0}}) == 9);
}

TEST_CASE("diophantine solve") {
  IntMat a{{0, 1, 2}, {1, 1, 0}};
  auto z = solve_diophantine(a, IntVec{3, 2});
  REQUIRE(z.has_value());
  CHECK((*z)[1] + 2 * (*z)[2] == 3);
  CHECK((*z)[0] + (*z)[1] == 2);
  // 2x = 1 has no integer solution
  CHECK_FALSE(solve_diophantine(IntMat{{2}}, IntVec{1}).has_value());
  CHECK(solve_diophantine(IntMat{{2}}, IntVec{6}).has_value());
}

TEST_CASE("smith normal form") {
  IntMat m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithResult s = smith(m);
  CHECK(mul(mul(s.U, m), s.V) == s.S);
  Int du = det_bareiss(s.U), dv = det_bareiss(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  CHECK(s.S(0, 0) == 2);
  CHECK(s.S(1, 1) == 6);
  CHECK(s.S(2, 2) == 12);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(s.S(i, j) == 0);
}

TEST_CASE("exact simplex") {
  // max x + y st x + 2y <= 4, 3x + y <= 6, x,y >= 0 -> (8/5, 6/5), value 14/5
  LpProblem p;
  p.maximize = true;
  p.c = {rat(1), rat(1)};
  p.rows = {{rat(1), rat(2)}, {rat(3), rat(1)}};
  p.senses = {LpSense::le, LpSense::le};
  p.rhs = {rat(4), rat(6)};
  LpSolution s = lp_solve(p);
  REQUIRE(s.status == LpStatus::optimal);
  CHECK(s.objective == rat(14, 5));
  CHECK(s.x[0] == rat(8, 5));
  CHECK(s.x[1] == rat(6, 5));

  // infeasible: x <= -1 with x >= 0
  LpProblem q;
  q.c = {rat(1)};
  q.rows = {{rat(1)}};
  q.senses = {LpSense::le};
  q.rhs = {rat(-1)};
  CHECK(lp_solve(q).status == LpStatus::infeasible);

  // unbounded: max x, x >= 1
  LpProblem u;
  u.c = {rat(1)};
  u.rows = {{rat(1)}};
  u.senses = {LpSense::ge};
  u.rhs = {rat(1)};
  CHECK(lp_solve(u).status == LpStatus::unbounded);

  // equality with a free variable: min y st y - x = 2, x free in [-3, ...]
  LpProblem e;
  e.maximize = false;
  e.c = {rat(0), rat(1)};
  e.rows = {{rat(-1), rat(1)}};
  e.senses = {LpSense::eq};
  e.rhs = {rat(2)};
  e.lo = {std::optional<Rat>(rat(-3)), std::nullopt};
  e.hi.resize(2);
  LpSolution es = lp_solve(e);
  REQUIRE(es.status == LpStatus::optimal);
  CHECK(es.objective == rat(-1));
}

TEST_CASE("rational cone membership") {
  IntMat a{{0, 1, 2}, {1, 1, 0}};
  CHECK(lp_cone_feasible(a, IntVec{3, 2}));
  CHECK(lp_cone_feasible(a, IntVec{1, 0})); // rational point exists
  CHECK_FALSE(lp_cone_feasible(a, IntVec{-1, 0}));
  CHECK_FALSE(lp_cone_feasible(a, IntVec{0, -2}));
}
