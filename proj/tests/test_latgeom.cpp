#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geom_checks.hpp"
#include "hnf.hpp"
#include "lattice.hpp"
#include "oracles.hpp"

using namespace kf;

TEST_CASE("lattice construction") {
  LatticeBasis l = make_lattice(IntMat{{0, 1, 2}, {1, 1, 0}});
  CHECK(l.n == 3);
  CHECK(l.k == 2);
  CHECK(l.det_sq == 9);
  LatticeBasis z2 = make_lattice(IntMat{{1, 0}, {0, 1}});
  CHECK(z2.det_sq == 1);
}

TEST_CASE("lll keeps the lattice and shortens the basis") {
  IntMat b{{1, 0, 0}, {4, 1, 0}, {9, 4, 1}};
  IntMat r = lll_reduce_rows(b, rat(3, 4));
  CHECK(row_hnf(r) == row_hnf(b));
  // first reduced vector no longer than the shortest input row
  Int best = norm_sq(b.row(0));
  for (std::size_t i = 1; i < b.rows; ++i) best = std::min(best, norm_sq(b.row(i)));
  CHECK(norm_sq(r.row(0)) <= best);
}

TEST_CASE("short vector listing") {
  LatticeBasis z2 = make_lattice(IntMat{{1, 0}, {0, 1}});
  std::vector<IntVec> v = vectors_up_to(z2, Int(2), 100000);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == IntVec{0, 1});
  CHECK(v[1] == IntVec{1, 0});
  CHECK(v[2] == IntVec{1, -1});
  CHECK(v[3] == IntVec{1, 1});
  // canonical sign: first nonzero entry positive
  for (const IntVec& x : v) {
    std::size_t j = 0;
    while (x[j] == 0) ++j;
    CHECK(x[j] > 0);
  }
  CHECK(vectors_up_to(z2, Int(0), 100000).empty());
}

TEST_CASE("successive minima, frozen values") {
  LatticeBasis z2 = make_lattice(IntMat{{1, 0}, {0, 1}});
  MinimaProfile p = successive_minima(z2);
  REQUIRE(p.lambda_sq.size() == 2);
  CHECK(p.lambda_sq[0] == 1);
  CHECK(p.lambda_sq[1] == 1);

  LatticeBasis st = make_lattice(IntMat{{1, 0}, {0, 5}});
  MinimaProfile ps = successive_minima(st);
  CHECK(ps.lambda_sq[0] == 1);
  CHECK(ps.lambda_sq[1] == 25);
  CHECK(norm_sq(ps.witnesses.row(0)) == 1);
  CHECK(norm_sq(ps.witnesses.row(1)) == 25);

  // rank-1 lattice spanned by (2,-2,1)
  MinimaProfile p1 = successive_minima(make_lattice(IntMat{{2, -2, 1}}));
  REQUIRE(p1.lambda_sq.size() == 1);
  CHECK(p1.lambda_sq[0] == 9);

  // kernel of (1,2,3): minima 3 and 5
  MinimaProfile pk = successive_minima(make_lattice(kernel_lattice(IntMat{{1, 2, 3}})));
  CHECK(pk.lambda_sq[0] == 3);
  CHECK(pk.lambda_sq[1] == 5);
}

TEST_CASE("successive minima vs exhaustive search") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 25; ++it) {
    std::size_t n = 2 + rng() % 2, k = 1 + rng() % n;
    IntMat b(k, n);
    do {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
          b(i, j) = Int(static_cast<long>(rng() % 9)) - 4;
    } while (rank(b) < k);
    MinimaProfile p = successive_minima(make_lattice(b));
    // exhaust over a reduced basis so the small coefficient box is conclusive
    std::vector<Int> ref = oracle::brute_minima_sq(lll_reduce_rows(b, rat(3, 4)), 4);
    REQUIRE(p.lambda_sq.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(p.lambda_sq[i] == ref[i]);
    // witnesses realize the minima and are independent
    IntMat w = p.witnesses;
    CHECK(rank(w) == k);
    for (std::size_t i = 0; i < k; ++i) CHECK(norm_sq(w.row(i)) == p.lambda_sq[i]);
  }
}

TEST_CASE("saturation") {
  CHECK(saturate_rows(IntMat{{2, 4}}) == IntMat{{1, 2}});
  CHECK(saturate_rows(IntMat{{2, 0}, {0, 2}}) == IntMat{{1, 0}, {0, 1}});
  IntMat s = saturate_rows(IntMat{{2, -2, 1}});
  CHECK(s == IntMat{{2, -2, 1}}); // already primitive
  // saturation is idempotent and primitive
  IntMat t = saturate_rows(IntMat{{2, 2, 0}, {0, 4, 4}});
  CHECK(minor_gcd(t) == 1);
  CHECK(saturate_rows(t) == t);
}

TEST_CASE("rational coordinates in a basis") {
  LatticeBasis l = make_lattice(IntMat{{1, 1, 0}, {0, 1, 2}});
  RatVec c = coords_in_basis(l, RatVec{rat(1), rat(2), rat(2)});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == rat(1));
  CHECK(c[1] == rat(1));
}

TEST_CASE("minkowski sandwich on frozen lattices") {
  for (const IntMat& b : {IntMat{{1, 0}, {0, 1}}, IntMat{{1, 0}, {0, 5}},
                          IntMat{{2, -2, 1}}, IntMat{{1, -1, 0}, {0, 1, -1}}}) {
    LatticeBasis l = make_lattice(b);
    MinimaProfile p = successive_minima(l);
    MinkowskiReport r = minkowski_check(l, p);
    CHECK(r.pass);
    CHECK(r.slack_lower_sq >= 1);
    CHECK(r.slack_upper_sq >= 1);
  }
}

TEST_CASE("transference bounds bracket the covering radius of z2") {
  LatticeBasis z2 = make_lattice(IntMat{{1, 0}, {0, 1}});
  MuBounds b = jarnik_mu_bounds(successive_minima(z2));
  // true value sqrt(1/2) ~ 0.7071
  CHECK(b.lower <= rat(7072, 10000));
  CHECK(b.upper >= rat(7071, 10000));
  CHECK(b.lower >= rat(1, 2));
  CHECK(b.upper <= rat(10001, 10000));
}

TEST_CASE("minima gap index, frozen") {
  LatticeBasis st = make_lattice(IntMat{{1, 0}, {0, 100}});
  MinimaProfile p = successive_minima(st);
  REQUIRE(p.lambda_sq[1] == 10000);
  // n - m = 2, det_sq = 10^4; lam = 2 meets lambda_2 > lam * det^(1/2)
  std::size_t i = minima_gap_check(p, rat(2), 2, 4, Int(10000));
  CHECK(i == 1);
  // gap condition violated for lam = 50
  CHECK_THROWS_AS(minima_gap_check(p, rat(50), 2, 4, Int(10000)), error);
}
