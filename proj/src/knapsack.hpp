#pragma once

#include <cstdint>
#include <optional>

#include "hnf.hpp"
#include "lattice.hpp"

namespace kf {

// Instance of the feasibility problem {x >= 0 integer : A x = b} with the
// expensive invariants (kernel lattice, HNF, vertex solvers for the
// translate polytope) computed once.
struct KnapsackInstance {
  std::size_t m = 0, n = 0;
  IntMat a;            // m x n, full row rank, primitive, pointed cone
  IntVec v;            // sum of the columns of a
  HnfResult h;         // column-style HNF of a
  LatticeBasis kernel; // integer kernel of a, LLL-reduced rows

  struct SubsetSolver {
    std::vector<std::size_t> cols;  // constraint subset (column indices of a)
    std::vector<RatVec> inv;        // inverse of the corresponding k x k block
  };
  std::vector<SubsetSolver> corners;
};

// Shape, rank, primitivity (gcd of maximal minors = 1) and pointedness
// (Ax = 0, x >= 0 only for x = 0); throws rank_config / not_primitive /
// cone_not_pointed.
void validate_matrix(const IntMat& a);

KnapsackInstance make_instance(const IntMat& a); // validates first

struct FeasibilityOutcome {
  bool feasible = false;
  std::optional<IntVec> witness; // nonnegative integer solution when feasible
  std::uint64_t nodes = 0;       // lattice translates tested
};

FeasibilityOutcome feasible(const KnapsackInstance& inst, const IntVec& b,
                            std::uint64_t budget = 1000000);

// Classical Frobenius number of positive coprime a (m = 1); -1 when every
// nonnegative integer is representable.
Int frobenius_number(const IntVec& a, std::uint64_t budget = 1000000);

struct LineProfile {
  std::vector<bool> feasible;           // entry k decides b = k*w, k = 0..kmax
  std::optional<std::size_t> threshold; // least k0 with the whole tail feasible
};

LineProfile line_feasibility_profile(const KnapsackInstance& inst, const IntVec& w,
                                     std::size_t kmax, std::uint64_t budget = 1000000);

} // namespace kf
