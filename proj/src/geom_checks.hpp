#pragma once

#include "enclosure.hpp"
#include "lattice.hpp"

namespace kf {

struct MinkowskiReport {
  bool pass = false;
  Rat slack_lower_sq; // (prod lambda_sq * omega_lo^2) / ((2^k/k!)^2 det_sq)
  Rat slack_upper_sq; // (4^k det_sq) / (prod lambda_sq * omega_hi^2)
};

// Certified check of (2^k/k!) det <= (prod lambda_i) vol(B_k) <= 2^k det,
// carried out on squares with a ball-volume enclosure.
MinkowskiReport minkowski_check(const LatticeBasis& l, const MinimaProfile& p,
                                int bits = 64);

struct MuBounds {
  Rat lower; // certified <= mu(ball, L)
  Rat upper; // certified >= mu(ball, L)
};

// Transference bounds (1/2) lambda_k <= mu <= (1/2) sum lambda_i.
MuBounds jarnik_mu_bounds(const MinimaProfile& p, int bits = 40);

// Smallest 1-based index i with lambda_{i+1}/lambda_i > c2(m,n) lam^{2/(n-m-1)},
// c2 = 2^{-2/(n-m-1)} omega_{n-m}^{2/((n-m)(n-m-1))}. Requires the
// determinant-normalized gap condition lambda_{n-m} > lam * det^{1/(n-m)}.
std::size_t minima_gap_check(const MinimaProfile& p, const Rat& lam, std::size_t m,
                             std::size_t n, const Int& det_sq, int bits = 64);

} // namespace kf
