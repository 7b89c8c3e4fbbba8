#pragma once

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "matrix.hpp"

namespace kf {

struct LatticeBasis {
  std::size_t n = 0; // ambient dimension
  std::size_t k = 0; // rank
  IntMat basis;      // k x n, rows linearly independent
  IntMat gram;       // basis * basis^T
  Int det_sq;        // det(gram)
};

// Builds a LatticeBasis from independent rows; throws RankDeficient otherwise.
LatticeBasis make_lattice(const IntMat& rows);

struct MinimaProfile {
  std::vector<Int> lambda_sq; // non-decreasing squared Euclidean minima
  IntMat witnesses;           // k x n, row i attains lambda_sq[i]
};

// Exact LLL reduction with rational Gram-Schmidt; 1/4 < delta < 1.
IntMat lll_reduce_rows(const IntMat& rows, const Rat& delta);
LatticeBasis lll_reduce(const LatticeBasis& l, const Rat& delta);
LatticeBasis lll_reduce(const LatticeBasis& l); // delta = 99/100

// All nonzero lattice vectors with squared norm <= bound_sq, one per +-pair
// (first nonzero coordinate positive), sorted by (norm_sq, lex).
std::vector<IntVec> vectors_up_to(const LatticeBasis& l, const Int& bound_sq,
                                  std::uint64_t budget);

// Exact successive minima of the Euclidean ball via enumeration; rank <= 8.
MinimaProfile successive_minima(const LatticeBasis& l,
                                std::uint64_t budget = 10000000);

// span(L) cap Z^n with canonical (row-HNF) basis.
LatticeBasis saturate(const LatticeBasis& l);
IntMat saturate_rows(const IntMat& rows);

// Rational coordinates of v in the basis of l; throws if v is off the span.
RatVec coords_in_basis(const LatticeBasis& l, const RatVec& v);

} // namespace kf
