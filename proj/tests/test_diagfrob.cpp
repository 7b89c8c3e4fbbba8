#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "diagfrob.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace kf;

namespace {

const IntMat kBoundaryHoles{{0, 1, 2}, {1, 1, 0}};

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code;
  }
  return errc{};
}

} // namespace

TEST_CASE("cone facets and the level functional") {
  KnapsackInstance inst = make_instance(kBoundaryHoles);
  ConeData cone = cone_data(inst);
  CHECK(cone.normals.rows == 2); // the quadrant
  CHECK(t_star(cone, inst.v) == 1);
  CHECK(t_star(cone, IntVec{1, 0}) == 0);
  CHECK(t_star(cone, IntVec{6, 4}) == 2);
  CHECK(t_star(cone, IntVec{0, 0}) == 0);
  CHECK(t_star(cone, IntVec{3, 1}) == rat(1, 2));
  CHECK(code_of([&] { t_star(cone, IntVec{-1, 2}); }) == errc::not_in_cone);
}

TEST_CASE("level functional shifts along v") {
  KnapsackInstance inst = make_instance(kBoundaryHoles);
  ConeData cone = cone_data(inst);
  for (const IntVec& b : {IntVec{1, 0}, IntVec{3, 1}, IntVec{2, 2}, IntVec{0, 5}}) {
    Rat base = t_star(cone, b);
    IntVec shifted = b;
    for (long k = 1; k <= 3; ++k) {
      for (std::size_t i = 0; i < 2; ++i) shifted[i] += inst.v[i];
      CHECK(t_star(cone, shifted) == base + k);
    }
  }
}

TEST_CASE("certified upper bounds, frozen") {
  KnapsackInstance inst = make_instance(kBoundaryHoles);
  GBounds b = certified_upper_bound(inst);
  // kernel is rank one with norm 9: every route gives exactly 3/2
  CHECK(b.det_bound.lo == rat(3, 2));
  CHECK(b.det_bound.hi == rat(3, 2));
  CHECK(b.jarnik.lo == rat(3, 2));
  CHECK(b.jarnik.hi == rat(3, 2));
  REQUIRE(b.ball.has_value());
  CHECK(b.ball->lo == rat(3, 2));
  CHECK(b.upper() == rat(3, 2));
}

TEST_CASE("upper bound formula for single rows") {
  // a = (3,5): rank-1 kernel <(5,-3)>, all three routes give sqrt(34)/2
  KnapsackInstance inst = make_instance(IntMat{{3, 5}});
  GBounds b = certified_upper_bound(inst);
  CHECK(b.det_bound.lo > rat(29154, 10000));
  CHECK(b.det_bound.hi < rat(29156, 10000));
  CHECK(b.det_bound.width() < rat(1, 1000000));
  CHECK(b.jarnik.lo > rat(29154, 10000));
  CHECK(b.jarnik.hi < rat(29156, 10000));
  REQUIRE(b.ball.has_value());
  CHECK(b.upper() <= b.jarnik.hi);

  // a = (3,5,7): rank-2 kernel, minima 6 and 14, det 83
  GBounds c = certified_upper_bound(make_instance(IntMat{{3, 5, 7}}));
  // det_bound = (4/pi) sqrt(83) = 11.5998...
  CHECK(c.det_bound.lo > rat(11599, 1000));
  CHECK(c.det_bound.hi < rat(11601, 1000));
  // jarnik = (sqrt(6) + sqrt(14)) / 2 = 3.09557...
  CHECK(c.jarnik.lo > rat(30955, 10000));
  CHECK(c.jarnik.hi < rat(30956, 10000));
  REQUIRE(c.ball.has_value());
  CHECK(c.upper() <= c.jarnik.hi);
}

TEST_CASE("exact g for the boundary-hole example") {
  KnapsackInstance inst = make_instance(kBoundaryHoles);
  DiagFrobResult r = exact_g(inst);
  CHECK(r.exact);
  CHECK(r.g.lo == 0);
  CHECK(r.g.hi == 0);
  CHECK_FALSE(r.attained); // holes exist arbitrarily deep on the facet
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == IntVec{1, 0});
  CHECK(r.certified_upper == rat(3, 2));
}

TEST_CASE("exact g for single rows") {
  DiagFrobResult r = exact_g(make_instance(IntMat{{3, 5}}));
  CHECK(r.exact);
  CHECK(r.g.lo == rat(7, 8)); // F = 7, column sum 8
  CHECK_FALSE(r.attained);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == IntVec{7});

  DiagFrobResult r2 = exact_g(make_instance(IntMat{{2, 3}}));
  CHECK(r2.g.lo == rat(1, 5));

  DiagFrobResult all = exact_g(make_instance(IntMat{{1, 7}}));
  CHECK(all.g.lo == 0);
  CHECK(all.attained); // no holes at all
  CHECK_FALSE(all.witness.has_value());
}

TEST_CASE("exact g matches the classical number on random rows") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rng() % 3;
    IntVec a(n);
    Int g;
    do {
      g = 0;
      for (std::size_t j = 0; j < n; ++j) {
        a[j] = Int(static_cast<long>(1 + rng() % 40));
        g = gcd(g, a[j]);
      }
    } while (g != 1);
    IntMat m(1, n);
    m.set_row(0, a);
    DiagFrobResult r = exact_g(make_instance(m));
    Int f = frobenius_number(a);
    Int s = 0;
    for (const Int& e : a) s += e;
    Rat expect = f < 0 ? Rat(0) : rat(f, s);
    CHECK(r.exact);
    CHECK(r.g.lo == expect);
    CHECK(r.attained == (f < 0));
    CHECK(r.g.lo <= r.certified_upper);
  }
}

TEST_CASE("two-row g: witness sharpness and hole dominance") {
  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 25) {
    IntMat a(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = Int(static_cast<long>(rng() % 6));
    try {
      validate_matrix(a);
    } catch (const error&) {
      continue;
    }
    ++done;
    KnapsackInstance inst = make_instance(a);
    DiagFrobResult r = exact_g(inst);
    REQUIRE(r.exact);
    ConeData cone = cone_data(inst);
    if (r.witness) {
      CHECK_FALSE(feasible(inst, *r.witness).feasible);
      CHECK(t_star(cone, *r.witness) == r.g.lo);
    } else {
      CHECK(r.attained);
      CHECK(r.g.lo == 0);
    }
    // no infeasible point in a box reaches beyond g
    for (long b1 = 0; b1 <= 12; ++b1)
      for (long b2 = 0; b2 <= 12; ++b2) {
        IntVec b{Int(b1), Int(b2)};
        try {
          Rat t = t_star(cone, b);
          if (t > r.g.lo) CHECK(feasible(inst, b).feasible);
        } catch (const error&) {
          // outside the cone
        }
      }
  }
}

TEST_CASE("hilbert basis recognition") {
  CHECK_FALSE(is_hilbert_basis(make_instance(kBoundaryHoles)));
  CHECK(is_hilbert_basis(make_instance(IntMat{{1, 0, 1}, {0, 1, 1}})));
  CHECK(is_hilbert_basis(make_instance(IntMat{{1, 1}})));
  CHECK_FALSE(is_hilbert_basis(make_instance(IntMat{{3, 5}})));
}

TEST_CASE("interior threshold diagnostics") {
  KnapsackInstance inst = make_instance(kBoundaryHoles);
  CHECK(code_of([&] { interior_threshold(inst, IntVec{1, 0}, rat(3, 2)); }) ==
        errc::not_interior);

  ThresholdReport rep = interior_threshold(inst, IntVec{1, 1}, Rat(1));
  CHECK(rep.gamma_sq == rat(9, 2));
  CHECK(rep.vertex_count == 2);
  REQUIRE(rep.barycenter.size() == 3);
  CHECK(rep.barycenter[0] == rat(1, 2));
  CHECK(rep.barycenter[1] == rat(1, 2));
  CHECK(rep.barycenter[2] == rat(1, 4));
  CHECK_FALSE(rep.center_check); // 1/4 < 1/gamma = sqrt(2)/3
  // threshold encloses gamma = 3/sqrt(2) = 2.1213...
  CHECK(rep.threshold.lo * rep.threshold.lo <= rat(9, 2));
  CHECK(rep.threshold.hi * rep.threshold.hi >= rat(9, 2));
  CHECK(rep.threshold.width() < rat(1, 1000000));
}

TEST_CASE("threshold diagnostics for a single row") {
  KnapsackInstance inst = make_instance(IntMat{{3, 5}});
  ThresholdReport rep = interior_threshold(inst, IntVec{1}, rat(7, 8));
  CHECK(rep.gamma_sq == 17); // 34 / 2
  CHECK(rep.vertex_count == 2);
  CHECK(rep.barycenter == RatVec{rat(1, 6), rat(1, 10)});
  CHECK_FALSE(rep.center_check);
  // threshold encloses (7/8) sqrt(17)
  Rat target_sq = rat(49, 64) * 17;
  CHECK(rep.threshold.lo * rep.threshold.lo <= target_sq);
  CHECK(rep.threshold.hi * rep.threshold.hi >= target_sq);
}
