#include "hnf.hpp"

namespace kf {

namespace {

// column operation helpers on (M, U) pairs
void col_combine(IntMat& m, IntMat& u, std::size_t ci, std::size_t cj, const Int& p,
                 const Int& q, const Int& r, const Int& s) {
  // (col_i, col_j) <- (p*col_i + q*col_j, r*col_i + s*col_j)
  for (std::size_t k = 0; k < m.rows; ++k) {
    Int vi = m(k, ci), vj = m(k, cj);
    m(k, ci) = p * vi + q * vj;
    m(k, cj) = r * vi + s * vj;
  }
  for (std::size_t k = 0; k < u.rows; ++k) {
    Int vi = u(k, ci), vj = u(k, cj);
    u(k, ci) = p * vi + q * vj;
    u(k, cj) = r * vi + s * vj;
  }
}

void col_addmul(IntMat& m, IntMat& u, std::size_t cdst, std::size_t csrc, const Int& f) {
  for (std::size_t k = 0; k < m.rows; ++k) m(k, cdst) += f * m(k, csrc);
  for (std::size_t k = 0; k < u.rows; ++k) u(k, cdst) += f * u(k, csrc);
}

void col_negate(IntMat& m, IntMat& u, std::size_t c) {
  for (std::size_t k = 0; k < m.rows; ++k) m(k, c) = -m(k, c);
  for (std::size_t k = 0; k < u.rows; ++k) u(k, c) = -u(k, c);
}

void col_swap(IntMat& m, IntMat& u, std::size_t ci, std::size_t cj) {
  for (std::size_t k = 0; k < m.rows; ++k) swap(m(k, ci), m(k, cj));
  for (std::size_t k = 0; k < u.rows; ++k) swap(u(k, ci), u(k, cj));
}

} // namespace

HnfResult hnf(const IntMat& input) {
  std::size_t m = input.rows, n = input.cols;
  if (m == 0 || n == 0 || m > n) fail(errc::rank_config, "hnf needs 1 <= rows <= cols");
  IntMat w = input;
  IntMat u = IntMat::identity(n);
  for (std::size_t i = 0; i < m; ++i) {
    // clear row i to the right of column i
    for (std::size_t j = i + 1; j < n; ++j) {
      if (w(i, j) == 0) continue;
      if (w(i, i) == 0) {
        col_swap(w, u, i, j);
        continue;
      }
      Int s, t;
      Int g = gcdext(w(i, i), w(i, j), s, t);
      Int ai = w(i, i) / g, aj = w(i, j) / g;
      // det of [[s, -aj],[t, ai]] is s*ai + t*aj = 1
      col_combine(w, u, i, j, s, t, -aj, ai);
    }
    if (w(i, i) == 0) fail(errc::rank_deficient, "hnf: input not full row rank");
    if (w(i, i) < 0) col_negate(w, u, i);
    for (std::size_t j = 0; j < i; ++j) {
      Int f = fdiv(w(i, j), w(i, i));
      if (f != 0) col_addmul(w, u, j, i, -f);
    }
  }
  IntMat h(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) h(i, j) = w(i, j);
  return {h, u};
}

IntMat row_hnf(const IntMat& input) {
  std::size_t m = input.rows, n = input.cols;
  IntMat w = input;
  std::size_t r = 0; // current pivot row
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // gcd the column below r into row r
    for (std::size_t i = r + 1; i < m; ++i) {
      if (w(i, c) == 0) continue;
      if (w(r, c) == 0) {
        for (std::size_t j = 0; j < n; ++j) swap(w(r, j), w(i, j));
        continue;
      }
      Int s, t;
      Int g = gcdext(w(r, c), w(i, c), s, t);
      Int ar = w(r, c) / g, ai = w(i, c) / g;
      for (std::size_t j = 0; j < n; ++j) {
        Int vr = w(r, j), vi = w(i, j);
        w(r, j) = s * vr + t * vi;
        w(i, j) = -ai * vr + ar * vi;
      }
    }
    if (w(r, c) == 0) continue;
    if (w(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) w(r, j) = -w(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int f = fdiv(w(i, c), w(r, c));
      if (f != 0)
        for (std::size_t j = 0; j < n; ++j) w(i, j) -= f * w(r, j);
    }
    ++r;
  }
  IntMat out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = w(i, j);
  return out;
}

IntMat kernel_lattice(const IntMat& m) {
  // Row-reduce a copy to find the row rank first; hnf() requires full row
  // rank, so run it on an independent row subset.
  std::size_t rk = rank(m);
  if (rk == 0) return row_hnf(IntMat::identity(m.cols));
  IntMat basis;
  if (rk == m.rows) {
    basis = m;
  } else {
    // select an independent subset of rows greedily
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
      rows.push_back(m.row(i));
      if (rank(from_rows(rows)) < rows.size()) rows.pop_back();
    }
    basis = from_rows(rows);
  }
  HnfResult h = hnf(basis);
  std::size_t n = m.cols, k = basis.rows;
  IntMat ker(n - k, n);
  for (std::size_t j = k; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) ker(j - k, i) = h.U(i, j);
  return row_hnf(ker);
}

static bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Int minor_gcd(const IntMat& m) {
  if (m.rows > m.cols) fail(errc::rank_config, "minor_gcd needs rows <= cols");
  std::size_t k = m.rows, n = m.cols;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Int g = 0;
  do {
    IntMat sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, idx[j]);
    g = gcd(g, det_bareiss(sub));
    if (g == 1) return g;
  } while (next_combination(idx, n));
  return g;
}

Int gram_det(const IntMat& m) { return det_bareiss(gram(m)); }

std::optional<IntVec> solve_diophantine(const HnfResult& h, const IntVec& b) {
  std::size_t m = h.H.rows, n = h.U.rows;
  if (b.size() != m) fail(errc::bad_input, "solve_diophantine: rhs size mismatch");
  // forward-substitute H y = b over the rationals, demand integrality
  IntVec y(m);
  for (std::size_t i = 0; i < m; ++i) {
    Int acc = b[i];
    for (std::size_t j = 0; j < i; ++j) acc -= h.H(i, j) * y[j];
    if (acc % h.H(i, i) != 0) return std::nullopt;
    y[i] = acc / h.H(i, i);
  }
  IntVec z(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < m; ++j) acc += h.U(i, j) * y[j];
    z[i] = acc;
  }
  return z;
}

std::optional<IntVec> solve_diophantine(const IntMat& m, const IntVec& b) {
  return solve_diophantine(hnf(m), b);
}

} // namespace kf
