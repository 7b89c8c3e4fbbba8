#pragma once

#include <optional>

#include "matrix.hpp"

namespace kf {

// Column-style Hermite normal form of a full-row-rank m x n matrix:
// M * U = [H | 0], U unimodular, H lower triangular with positive diagonal
// and 0 <= H(i,j) < H(i,i) for j < i.
struct HnfResult {
  IntMat H; // m x m
  IntMat U; // n x n
};

HnfResult hnf(const IntMat& m); // throws rank_deficient when rank < rows

// Row-style HNF used as the canonical form for lattice bases: returns the
// unique upper-echelon basis of the row lattice, pivots positive, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
// result has rank(m) rows.
IntMat row_hnf(const IntMat& m);

// Basis of {z integer : M z = 0} as rows, canonicalized by row_hnf. The
// result is saturated (a primitive lattice) because it consists of columns of
// a unimodular transform.
IntMat kernel_lattice(const IntMat& m);

// gcd of |det| over all maximal square column-submatrices; 0 iff rank < rows.
Int minor_gcd(const IntMat& m);

// det(M * M^T), exact.
Int gram_det(const IntMat& m);

// One integer solution of M z = b, or nullopt when none exists.
std::optional<IntVec> solve_diophantine(const IntMat& m, const IntVec& b);

// Same, but reusing a precomputed HNF of m.
std::optional<IntVec> solve_diophantine(const HnfResult& h, const IntVec& b);

} // namespace kf
