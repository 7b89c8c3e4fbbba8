#pragma once

#include <cstdint>
#include <optional>

#include "covering.hpp"
#include "geom_checks.hpp"
#include "knapsack.hpp"

namespace kf {

struct ConeData {
  std::size_t m = 0;
  IntMat normals;                                // facets x m, primitive inward
  std::vector<std::vector<std::size_t>> support; // generator columns on each facet
  IntVec denom;                                  // <u_F, v> per facet, positive
};

ConeData cone_data(const KnapsackInstance& inst); // m <= 4

// t*(b) = min_F <u_F, b>/<u_F, v>; throws not_in_cone when b is outside.
Rat t_star(const ConeData& cone, const IntVec& b);

struct GBounds {
  RatIv det_bound;           // (n-m) 2^{n-m-1} / omega_{n-m} * sqrt(det(A A^T))
  RatIv jarnik;              // (1/2) sum of the kernel lattice minima
  std::optional<RatIv> ball; // exact ball covering radius when kernel rank <= 2
  Rat upper() const;         // smallest certified upper end
};

GBounds certified_upper_bound(const KnapsackInstance& inst, int bits = 64);

struct DiagFrobResult {
  RatIv g;                       // point interval iff exact
  bool exact = false;
  bool attained = false;         // meaningful when exact: true iff no holes exist
  std::optional<IntVec> witness; // hole attaining sup t* (deterministic pick)
  Rat certified_upper;
};

// Diagonal Frobenius number: sup of t*(b) over infeasible integer points of
// the cone, 0 when none. Exact for m <= 2; windowed two-sided interval for
// larger m.
DiagFrobResult exact_g(const KnapsackInstance& inst, std::uint64_t budget = 1000000,
                       int bits = 64);

// g = 0 and attained, i.e. every integer point of the cone is representable.
bool is_hilbert_basis(const KnapsackInstance& inst, std::uint64_t budget = 1000000);

struct ThresholdReport {
  Rat gamma_sq;               // det(A A^T)/(n-m+1)
  RatIv threshold;            // gamma * g_upper
  std::size_t vertex_count = 0;
  RatVec barycenter;          // of the vertices of P(A, w)
  bool center_check = false;  // every barycenter coordinate >= 1/gamma
};

// Threshold diagnostics at a strictly interior right-hand side w; throws
// not_interior otherwise. The barycenter check is reported, not asserted.
ThresholdReport interior_threshold(const KnapsackInstance& inst, const IntVec& w,
                              const Rat& g_upper, int bits = 64);

} // namespace kf
