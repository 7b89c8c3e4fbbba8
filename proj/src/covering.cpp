#include "covering.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "error.hpp"
#include "geom_checks.hpp"
#include "lp.hpp"

namespace kf {
namespace {

using P2 = std::array<Rat, 2>;
using Poly = std::vector<P2>;

Rat cross3(const P2& a, const P2& b, const P2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

Rat area2(const Poly& p) { // twice the signed area, positive for CCW
  Rat s(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const P2& a = p[i];
    const P2& b = p[(i + 1) % p.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return s;
}

Poly convex_hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::size_t n = pts.size();
  if (n < 3) return Poly(pts.begin(), pts.end());
  Poly h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross3(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h; // CCW, no collinear vertices
}

// Keep the part of p with nx*x + ny*y <= c (Sutherland-Hodgman).
Poly clip(const Poly& p, const Rat& nx, const Rat& ny, const Rat& c) {
  Poly out;
  std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P2& a = p[i];
    const P2& b = p[(i + 1) % n];
    Rat fa = nx * a[0] + ny * a[1] - c;
    Rat fb = nx * b[0] + ny * b[1] - c;
    bool ina = fa <= 0, inb = fb <= 0;
    if (ina) out.push_back(a);
    if (ina != inb) {
      Rat t = fa / (fa - fb);
      out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
  }
  Poly ded;
  for (auto& v : out)
    if (ded.empty() || !(ded.back() == v)) ded.push_back(std::move(v));
  if (ded.size() > 1 && ded.front() == ded.back()) ded.pop_back();
  if (ded.size() < 3) ded.clear();
  return ded;
}

// Append the positive-area pieces of piece \ q to out (q convex CCW).
void subtract(const Poly& piece, const Poly& q, std::vector<Poly>& out) {
  Poly cur = piece;
  std::size_t n = q.size();
  for (std::size_t i = 0; i < n && !cur.empty(); ++i) {
    const P2& a = q[i];
    const P2& b = q[(i + 1) % n];
    Rat nx = a[1] - b[1]; // interior of q: nx*x + ny*y >= cq
    Rat ny = b[0] - a[0];
    Rat cq = nx * a[0] + ny * a[1];
    Poly outside = clip(cur, nx, ny, cq);
    if (!outside.empty() && area2(outside) > 0) out.push_back(std::move(outside));
    cur = clip(cur, -nx, -ny, -cq);
  }
}

struct BBox {
  Rat xmin, xmax, ymin, ymax;
};

BBox bbox_of(const Poly& p) {
  BBox b{p[0][0], p[0][0], p[0][1], p[0][1]};
  for (const P2& v : p) {
    if (v[0] < b.xmin) b.xmin = v[0];
    if (v[0] > b.xmax) b.xmax = v[0];
    if (v[1] < b.ymin) b.ymin = v[1];
    if (v[1] > b.ymax) b.ymax = v[1];
  }
  return b;
}

struct CoverEngine {
  Poly body; // unit scale, CCW, origin strictly interior
  BBox bb;

  explicit CoverEngine(Poly b) : body(std::move(b)), bb(bbox_of(body)) {}

  // Uncovered remainder of the unit cell under Z^2 + sigma*body.
  std::vector<Poly> uncovered(const Rat& sigma, std::uint64_t budget) const {
    Poly cell{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}};
    std::vector<Poly> pieces{cell};
    if (sigma <= 0) return pieces;
    Int zx_lo = ceil_rat(-sigma * bb.xmax), zx_hi = floor_rat(1 - sigma * bb.xmin);
    Int zy_lo = ceil_rat(-sigma * bb.ymax), zy_hi = floor_rat(1 - sigma * bb.ymin);
    std::uint64_t work = 0;
    for (Int zx = zx_lo; zx <= zx_hi && !pieces.empty(); ++zx)
      for (Int zy = zy_lo; zy <= zy_hi && !pieces.empty(); ++zy) {
        BBox qb{sigma * bb.xmin + Rat(zx), sigma * bb.xmax + Rat(zx),
                sigma * bb.ymin + Rat(zy), sigma * bb.ymax + Rat(zy)};
        Poly q;
        q.reserve(body.size());
        for (const P2& v : body)
          q.push_back({sigma * v[0] + Rat(zx), sigma * v[1] + Rat(zy)});
        std::vector<Poly> next;
        next.reserve(pieces.size() + 4);
        for (auto& pc : pieces) {
          work += pc.size();
          if (work > budget) fail(errc::budget_exceeded, "covering subdivision budget exhausted");
          BBox pb = bbox_of(pc);
          if (pb.xmax <= qb.xmin || pb.xmin >= qb.xmax || pb.ymax <= qb.ymin ||
              pb.ymin >= qb.ymax) {
            next.push_back(std::move(pc));
            continue;
          }
          subtract(pc, q, next);
        }
        pieces.swap(next);
      }
    return pieces;
  }

  bool covered(const Rat& sigma, std::uint64_t budget) const {
    return uncovered(sigma, budget).empty();
  }
};

// Line nx*x + ny*y = c0 + c1*sigma (cell edges have c1 = 0).
struct EvLine {
  Rat nx, ny, c0, c1;
};

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

MuResult mu_rank1(const std::vector<RatVec>& ys) {
  Rat cmin = ys[0][0], cmax = ys[0][0];
  for (const RatVec& y : ys) {
    if (y[0] < cmin) cmin = y[0];
    if (y[0] > cmax) cmax = y[0];
  }
  if (cmax == cmin) fail(errc::bad_input, "body has empty interior in the lattice span");
  return {iv_point(Rat(1) / (cmax - cmin)), true};
}

MuResult mu_rank2(const std::vector<RatVec>& ys, std::uint64_t budget) {
  std::vector<P2> pts;
  pts.reserve(ys.size());
  for (const RatVec& y : ys) pts.push_back({y[0], y[1]});
  Poly hull = convex_hull(std::move(pts));
  if (hull.size() < 3 || !(area2(hull) > 0))
    fail(errc::bad_input, "body has empty interior in the lattice span");
  CoverEngine eng(std::move(hull));

  // Edge offsets at unit scale; origin interior means every cq < 0.
  std::size_t ne = eng.body.size();
  std::vector<std::array<Rat, 3>> edges(ne); // nx, ny, cq
  Rat r0_sq; // squared inradius about the origin
  for (std::size_t i = 0; i < ne; ++i) {
    const P2& a = eng.body[i];
    const P2& b = eng.body[(i + 1) % ne];
    Rat nx = a[1] - b[1], ny = b[0] - a[0];
    Rat cq = nx * a[0] + ny * a[1];
    if (!(cq < 0)) fail(errc::internal, "body barycenter not interior");
    edges[i] = {nx, ny, cq};
    Rat d = cq * cq / (nx * nx + ny * ny);
    if (i == 0 || d < r0_sq) r0_sq = d;
  }

  // sigma_up * r0 >= sqrt(2)/2 guarantees covering.
  Rat hi = Rat(isqrt(ceil_rat(rat(1, 2) / r0_sq)) + 1);
  if (!eng.covered(hi, budget)) fail(errc::internal, "covering ceiling is not covering");
  Rat lo(0);
  const Rat two40 = Rat(pow_int(Int(2), 40));
  while ((hi - lo) * two40 > hi) {
    Rat mid = (lo + hi) / 2;
    if (eng.covered(mid, budget))
      hi = mid;
    else
      lo = mid;
  }

  // The critical sigma solves a linear event among the boundary lines active
  // near the last uncovered region; extract candidates and test upward.
  std::vector<Poly> pieces = eng.uncovered(lo, budget);
  if (pieces.empty()) fail(errc::internal, "bracket invariant violated");
  BBox pb = bbox_of(pieces[0]);
  for (const Poly& pc : pieces) {
    BBox b = bbox_of(pc);
    if (b.xmin < pb.xmin) pb.xmin = b.xmin;
    if (b.xmax > pb.xmax) pb.xmax = b.xmax;
    if (b.ymin < pb.ymin) pb.ymin = b.ymin;
    if (b.ymax > pb.ymax) pb.ymax = b.ymax;
  }

  std::vector<EvLine> lines{{Rat(1), Rat(0), Rat(0), Rat(0)},
                            {Rat(1), Rat(0), Rat(1), Rat(0)},
                            {Rat(0), Rat(1), Rat(0), Rat(0)},
                            {Rat(0), Rat(1), Rat(1), Rat(0)}};
  {
    Int zx_lo = ceil_rat(pb.xmin - hi * eng.bb.xmax);
    Int zx_hi = floor_rat(pb.xmax - hi * eng.bb.xmin);
    Int zy_lo = ceil_rat(pb.ymin - hi * eng.bb.ymax);
    Int zy_hi = floor_rat(pb.ymax - hi * eng.bb.ymin);
    for (Int zx = zx_lo; zx <= zx_hi; ++zx)
      for (Int zy = zy_lo; zy <= zy_hi; ++zy)
        for (const auto& e : edges)
          lines.push_back({e[0], e[1], e[0] * Rat(zx) + e[1] * Rat(zy), e[2]});
  }
  // Keep only lines that can pass through the vanishing region for some
  // sigma in [lo, hi].
  std::vector<EvLine> active;
  for (const EvLine& L : lines) {
    Rat vmin = std::min(L.nx * pb.xmin, L.nx * pb.xmax) + std::min(L.ny * pb.ymin, L.ny * pb.ymax);
    Rat vmax = std::max(L.nx * pb.xmin, L.nx * pb.xmax) + std::max(L.ny * pb.ymin, L.ny * pb.ymax);
    Rat cmin = L.c0 + std::min(L.c1 * lo, L.c1 * hi);
    Rat cmax = L.c0 + std::max(L.c1 * lo, L.c1 * hi);
    if (vmin <= cmax && vmax >= cmin) active.push_back(L);
  }

  if (active.size() <= 60) {
    std::vector<Rat> cands;
    for (std::size_t i = 0; i < active.size(); ++i)
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const EvLine &A = active[i], &B = active[j];
        if (A.nx * B.ny - A.ny * B.nx == 0) {
          Rat t = (A.nx != 0) ? B.nx / A.nx : B.ny / A.ny;
          Rat denom = t * A.c1 - B.c1;
          if (denom != 0) {
            Rat s = (B.c0 - t * A.c0) / denom;
            if (lo < s && s <= hi) cands.push_back(s);
          }
          continue;
        }
        for (std::size_t l = j + 1; l < active.size(); ++l) {
          const EvLine& C = active[l];
          std::array<std::array<Rat, 3>, 3> m{{{A.nx, A.ny, -A.c1},
                                               {B.nx, B.ny, -B.c1},
                                               {C.nx, C.ny, -C.c1}}};
          Rat d = det3(m);
          if (d == 0) continue;
          std::array<std::array<Rat, 3>, 3> ms{{{A.nx, A.ny, A.c0},
                                                {B.nx, B.ny, B.c0},
                                                {C.nx, C.ny, C.c0}}};
          Rat s = det3(ms) / d;
          if (lo < s && s <= hi) cands.push_back(s);
        }
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const Rat& s : cands)
      if (eng.covered(s, budget)) return {iv_point(s), true};
  }
  return {{lo, hi}, false}; // certified bracket, exactness not established
}

// One nonzero rational kernel vector of an underdetermined row system.
RatVec rat_kernel_vec(std::vector<RatVec> m, std::size_t cols) {
  std::size_t rows = m.size(), pr = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pr]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[pr][c];
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[pr][cc];
    }
    pivot_col.push_back(c);
    ++pr;
  }
  std::vector<bool> isp(cols, false);
  for (std::size_t pc : pivot_col) isp[pc] = true;
  std::size_t fc = cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!isp[c]) {
      fc = c;
      break;
    }
  if (fc == cols) fail(errc::internal, "kernel vector requested from full-rank system");
  RatVec v(cols, Rat(0));
  v[fc] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    v[pivot_col[i]] = -m[i][fc] / m[i][pivot_col[i]];
  return v;
}

Rat gram_ip(const IntMat& g, const RatVec& u, const RatVec& v) {
  Rat s(0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * Rat(g(i, j)) * v[j];
  return s;
}

// Minkowski gauge of the simplex with vertex list ys (origin interior).
Rat simplex_gauge(const std::vector<RatVec>& ys, const RatVec& w) {
  std::size_t k = w.size();
  LpProblem p;
  p.maximize = false;
  p.c.assign(ys.size(), Rat(1));
  for (std::size_t c = 0; c < k; ++c) {
    RatVec row(ys.size());
    for (std::size_t j = 0; j < ys.size(); ++j) row[j] = ys[j][c];
    p.rows.push_back(std::move(row));
    p.senses.push_back(LpSense::eq);
    p.rhs.push_back(w[c]);
  }
  LpSolution sol = lp_solve(p);
  if (sol.status != LpStatus::optimal) fail(errc::internal, "gauge LP not optimal");
  return sol.objective;
}

MuResult mu_grid(const std::vector<RatVec>& ys, const LatticeBasis& l,
                 std::size_t res, int bits, std::uint64_t budget) {
  std::size_t k = l.k;
  if (ys.size() != k + 1)
    fail(errc::unsupported_rank, "grid mode requires a simplex body with rank+1 vertices");
  if (res == 0) fail(errc::bad_parameter, "grid resolution must be positive");
  {
    IntMat di(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      Int den(1);
      for (std::size_t c = 0; c < k; ++c) den = lcm(den, Rat(ys[i + 1][c] - ys[0][c]).get_den());
      for (std::size_t c = 0; c < k; ++c) {
        Rat e = (ys[i + 1][c] - ys[0][c]) * Rat(den);
        di(i, c) = e.get_num();
      }
    }
    if (det_bareiss(di) == 0)
      fail(errc::bad_input, "body has empty interior in the lattice span");
  }

  // Upper bound: mu(ball)/r_in with the inscribed ball in the gram metric.
  MinimaProfile prof = successive_minima(l, budget);
  MuBounds jb = jarnik_mu_bounds(prof, bits < 40 ? 40 : bits);
  Rat r_in_sq;
  bool first = true;
  for (std::size_t drop = 0; drop <= k; ++drop) {
    std::size_t base = (drop == 0) ? 1 : 0;
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i <= k; ++i) {
      if (i == drop || i == base) continue;
      RatVec diff(k);
      for (std::size_t c = 0; c < k; ++c) diff[c] = ys[i][c] - ys[base][c];
      RatVec row(k);
      for (std::size_t c = 0; c < k; ++c) {
        Rat s(0);
        for (std::size_t d = 0; d < k; ++d) s += diff[d] * Rat(l.gram(d, c));
        row[c] = s;
      }
      rows.push_back(std::move(row));
    }
    RatVec nrm = rat_kernel_vec(std::move(rows), k);
    Rat num = gram_ip(l.gram, nrm, ys[base]);
    Rat d = num * num / gram_ip(l.gram, nrm, nrm);
    if (first || d < r_in_sq) r_in_sq = d;
    first = false;
  }
  if (!(r_in_sq > 0)) fail(errc::internal, "degenerate inscribed ball");
  Rat sq_lo = sqrt_iv(r_in_sq, 40).lo;
  if (!(sq_lo > 0)) fail(errc::internal, "inscribed radius enclosure collapsed");
  Rat upper = jb.upper / sq_lo;

  // Lower bound: exact covering depth at midpoint grid samples.
  RatVec big(k, Rat(0)); // per-coordinate gauge bound multipliers
  for (std::size_t c = 0; c < k; ++c)
    for (const RatVec& y : ys) {
      Rat a = y[c] >= 0 ? y[c] : Rat(-y[c]);
      if (a > big[c]) big[c] = a;
    }
  Rat lower(0);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    RatVec p(k);
    for (std::size_t c = 0; c < k; ++c) p[c] = rat(2 * Int(idx[c]) + 1, 2 * Int(res));
    RatVec w0(k);
    for (std::size_t c = 0; c < k; ++c) w0[c] = p[c] - Rat(round_rat(p[c]));
    Rat best = simplex_gauge(ys, w0);
    // enumerate competing translates coordinate-recursive with pruning
    RatVec w(k);
    std::vector<Int> z(k);
    auto rec = [&](auto&& self, std::size_t c) -> void {
      if (c == k) {
        Rat g = simplex_gauge(ys, w);
        if (g < best) best = g;
        return;
      }
      Int zlo = ceil_rat(p[c] - best * big[c]);
      Int zhi = floor_rat(p[c] + best * big[c]);
      for (Int zc = zlo; zc <= zhi; ++zc) {
        w[c] = p[c] - Rat(zc);
        self(self, c + 1);
      }
    };
    rec(rec, 0);
    if (best > lower) lower = best;
    std::size_t c = 0;
    while (c < k && ++idx[c] == res) idx[c++] = 0;
    if (c == k) break;
  }
  if (lower > upper) fail(errc::internal, "grid bounds crossed");
  return {{lower, upper}, false};
}

} // namespace

MuResult inhomogeneous_minimum(const Polytope& s, const LatticeBasis& l, MuMode mode,
                               std::size_t grid_resolution, int bits,
                               std::uint64_t budget) {
  if (s.verts.empty()) fail(errc::bad_input, "body has no vertices");
  for (const RatVec& v : s.verts)
    if (v.size() != l.n) fail(errc::bad_input, "body vertex dimension mismatch");
  LatticeBasis lr = lll_reduce(l);
  RatVec bary(l.n, Rat(0));
  for (const RatVec& v : s.verts)
    for (std::size_t i = 0; i < l.n; ++i) bary[i] += v[i];
  for (std::size_t i = 0; i < l.n; ++i) bary[i] /= Rat((unsigned long)s.verts.size());
  std::vector<RatVec> ys;
  ys.reserve(s.verts.size());
  for (const RatVec& v : s.verts) {
    RatVec d(l.n);
    for (std::size_t i = 0; i < l.n; ++i) d[i] = v[i] - bary[i];
    ys.push_back(coords_in_basis(lr, d));
  }
  if (mode == MuMode::exact) {
    if (lr.k == 1) return mu_rank1(ys);
    if (lr.k == 2) return mu_rank2(ys, budget);
    fail(errc::unsupported_rank, "exact mode supports rank <= 2 only");
  }
  return mu_grid(ys, lr, grid_resolution, bits, budget);
}

Rat ball_covering_radius_sq(const LatticeBasis& l) {
  if (l.k == 1) return rat(l.gram(0, 0), 4);
  if (l.k != 2) fail(errc::unsupported_rank, "ball covering radius requires rank <= 2");
  Int a = l.gram(0, 0), b = l.gram(1, 1), c = l.gram(0, 1);
  if (a > b) std::swap(a, b);
  while (true) { // Lagrange reduction on the gram matrix
    Int q = round_rat(rat(c, a));
    Int c2 = c - q * a;
    Int b2 = b - 2 * q * c + q * q * a;
    c = c2;
    b = b2;
    if (b < a) {
      std::swap(a, b);
      continue;
    }
    break;
  }
  if (c > 0) c = -c;
  Int d = a + b + 2 * c; // short diagonal of the fundamental parallelogram
  // Obtuse superbase: covering radius = circumradius of the Delaunay triangle
  // with squared sides a, b, d; 16*area^2 = 4*(a*b - c^2) = 4*det_sq.
  return rat(a * b * d, 4 * l.det_sq);
}

} // namespace kf
