#pragma once

#include "matrix.hpp"

namespace kf {

// Smith normal form S = U * M * V with U, V unimodular, S diagonal with
// nonnegative entries and s_1 | s_2 | ... .
struct SmithResult {
  IntMat S, U, V;
};

SmithResult smith(const IntMat& m);

} // namespace kf
