#include "smith.hpp"

namespace kf {

namespace {

void row_combine(IntMat& m, IntMat& u, std::size_t ri, std::size_t rj, const Int& p,
                 const Int& q, const Int& r, const Int& s) {
  for (std::size_t k = 0; k < m.cols; ++k) {
    Int vi = m(ri, k), vj = m(rj, k);
    m(ri, k) = p * vi + q * vj;
    m(rj, k) = r * vi + s * vj;
  }
  for (std::size_t k = 0; k < u.cols; ++k) {
    Int vi = u(ri, k), vj = u(rj, k);
    u(ri, k) = p * vi + q * vj;
    u(rj, k) = r * vi + s * vj;
  }
}

void col_combine(IntMat& m, IntMat& v, std::size_t ci, std::size_t cj, const Int& p,
                 const Int& q, const Int& r, const Int& s) {
  for (std::size_t k = 0; k < m.rows; ++k) {
    Int vi = m(k, ci), vj = m(k, cj);
    m(k, ci) = p * vi + q * vj;
    m(k, cj) = r * vi + s * vj;
  }
  for (std::size_t k = 0; k < v.rows; ++k) {
    Int vi = v(k, ci), vj = v(k, cj);
    v(k, ci) = p * vi + q * vj;
    v(k, cj) = r * vi + s * vj;
  }
}

} // namespace

SmithResult smith(const IntMat& input) {
  std::size_t m = input.rows, n = input.cols;
  IntMat s = input;
  IntMat u = IntMat::identity(m);
  IntMat v = IntMat::identity(n);
  std::size_t t = 0;
  while (t < m && t < n) {
    // find a nonzero pivot in the remaining block, smallest |value|
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (s(i, j) == 0) continue;
        Int a = abs(s(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) row_combine(s, u, t, pi, 0, 1, 1, 0);
    if (pj != t) col_combine(s, v, t, pj, 0, 1, 1, 0);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        if (s(i, t) % s(t, t) == 0) {
          Int f = s(i, t) / s(t, t);
          row_combine(s, u, i, t, 1, -f, 0, 1);
        } else {
          Int a, b;
          Int g = gcdext(s(t, t), s(i, t), a, b);
          Int x = s(t, t) / g, y = s(i, t) / g;
          row_combine(s, u, t, i, a, b, -y, x);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        if (s(t, j) % s(t, t) == 0) {
          Int f = s(t, j) / s(t, t);
          col_combine(s, v, j, t, 1, -f, 0, 1);
        } else {
          Int a, b;
          Int g = gcdext(s(t, t), s(t, j), a, b);
          Int x = s(t, t) / g, y = s(t, j) / g;
          col_combine(s, v, t, j, a, b, -y, x);
          clean = false;
        }
      }
    }
    // enforce divisibility: s(t,t) must divide everything below-right
    bool redo = false;
    for (std::size_t i = t + 1; i < m && !redo; ++i)
      for (std::size_t j = t + 1; j < n && !redo; ++j)
        if (s(i, j) % s(t, t) != 0) {
          // add row i to row t and restart the pivot cleanup
          row_combine(s, u, t, i, 1, 1, 0, 1);
          redo = true;
        }
    if (redo) continue;
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
    ++t;
  }
  return {s, u, v};
}

} // namespace kf
