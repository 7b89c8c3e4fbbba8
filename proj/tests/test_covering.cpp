#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covering.hpp"
#include "error.hpp"
#include "hnf.hpp"

using namespace kf;

namespace {

Polytope segment_15() {
  // {x >= 0 : 3x + 5y = 1}
  Polytope s;
  s.verts = {RatVec{rat(1, 3), rat(0)}, RatVec{rat(0), rat(1, 5)}};
  return s;
}

} // namespace

TEST_CASE("ball covering radius, frozen") {
  CHECK(ball_covering_radius_sq(make_lattice(IntMat{{1, 0}, {0, 1}})) == rat(1, 2));
  // hexagonal lattice: deep hole at the triangle barycenter
  CHECK(ball_covering_radius_sq(make_lattice(IntMat{{1, -1, 0}, {0, 1, -1}})) ==
        rat(2, 3));
  // rank 1: half the spacing, squared
  CHECK(ball_covering_radius_sq(make_lattice(IntMat{{3, 4}})) == rat(25, 4));
  CHECK(ball_covering_radius_sq(make_lattice(IntMat{{2, -2, 1}})) == rat(9, 4));
  // stretched lattice: deep hole at (1/2, 5/2)
  CHECK(ball_covering_radius_sq(make_lattice(IntMat{{1, 0}, {0, 5}})) == rat(13, 2));
}

TEST_CASE("segment covering of a line lattice") {
  MuResult r = inhomogeneous_minimum(segment_15(), make_lattice(IntMat{{5, -3}}));
  CHECK(r.exact);
  CHECK(r.value.lo == 15);
  CHECK(r.value.hi == 15);
}

TEST_CASE("square covering of z2") {
  Polytope sq;
  sq.verts = {RatVec{rat(1), rat(1)}, RatVec{rat(-1), rat(1)}, RatVec{rat(-1), rat(-1)},
              RatVec{rat(1), rat(-1)}};
  MuResult r = inhomogeneous_minimum(sq, make_lattice(IntMat{{1, 0}, {0, 1}}));
  CHECK(r.exact);
  CHECK(r.value.lo == rat(1, 2));
}

TEST_CASE("corner simplex covering of z2") {
  Polytope tri;
  tri.verts = {RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(0)}, RatVec{rat(0), rat(1)}};
  MuResult r = inhomogeneous_minimum(tri, make_lattice(IntMat{{1, 0}, {0, 1}}));
  CHECK(r.exact);
  CHECK(r.value.lo == 2);
  CHECK(r.value.hi == 2);
}

TEST_CASE("covering value ignores translation") {
  Polytope tri;
  tri.verts = {RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(0)}, RatVec{rat(0), rat(1)}};
  Polytope moved = tri;
  for (RatVec& v : moved.verts) {
    v[0] += rat(7, 3);
    v[1] -= rat(5, 2);
  }
  MuResult a = inhomogeneous_minimum(tri, make_lattice(IntMat{{1, 0}, {0, 1}}));
  MuResult b = inhomogeneous_minimum(moved, make_lattice(IntMat{{1, 0}, {0, 1}}));
  CHECK(a.value.lo == b.value.lo);
  CHECK(a.value.hi == b.value.hi);
}

TEST_CASE("covering scales inversely with the body") {
  Polytope tri;
  tri.verts = {RatVec{rat(0), rat(0)}, RatVec{rat(2), rat(0)}, RatVec{rat(0), rat(2)}};
  MuResult r = inhomogeneous_minimum(tri, make_lattice(IntMat{{1, 0}, {0, 1}}));
  CHECK(r.exact);
  CHECK(r.value.lo == 1);
}

TEST_CASE("grid mode brackets the exact value") {
  Polytope tri;
  tri.verts = {RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(0)}, RatVec{rat(0), rat(1)}};
  MuResult g = inhomogeneous_minimum(tri, make_lattice(IntMat{{1, 0}, {0, 1}}),
                                     MuMode::grid, 12);
  CHECK_FALSE(g.value.lo > 2);
  CHECK_FALSE(g.value.hi < 2);
  CHECK(g.value.lo > 0);
}

TEST_CASE("degenerate bodies are rejected") {
  Polytope empty;
  LatticeBasis z2 = make_lattice(IntMat{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(inhomogeneous_minimum(empty, z2), error);
  // a single point cannot cover a positive-dimensional span
  Polytope pt;
  pt.verts = {RatVec{rat(1, 2), rat(1, 2)}};
  CHECK_THROWS_AS(inhomogeneous_minimum(pt, z2), error);
}
