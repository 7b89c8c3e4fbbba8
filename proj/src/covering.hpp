#pragma once

#include <cstdint>

#include "enclosure.hpp"
#include "lattice.hpp"

namespace kf {

struct Polytope {
  std::vector<RatVec> verts; // ambient rational coordinates
};

enum class MuMode { exact, grid };

struct MuResult {
  RatIv value;        // enclosure of mu; point interval iff exact
  bool exact = false;
};

// Inhomogeneous minimum mu(S, L): smallest sigma >= 0 such that the translates
// L + sigma*S' cover span(L), where S' is S shifted by minus its vertex
// barycenter. mu is invariant under translations of S, so the shift only
// places affine sections into the span. exact mode supports rank <= 2 and
// returns a point value (with a certified tight interval as fallback); grid
// mode supports simplex bodies (rank+1 vertices) of any rank <= 8 and returns
// a two-sided enclosure from fundamental-cell sampling and an inscribed ball.
MuResult inhomogeneous_minimum(const Polytope& s, const LatticeBasis& l,
                               MuMode mode = MuMode::exact,
                               std::size_t grid_resolution = 8, int bits = 64,
                               std::uint64_t budget = 1000000);

// Exact squared covering radius of the Euclidean unit ball, rank <= 2.
Rat ball_covering_radius_sq(const LatticeBasis& l);

} // namespace kf
