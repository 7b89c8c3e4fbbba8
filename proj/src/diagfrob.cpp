#include "diagfrob.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace kf {

ConeData cone_data(const KnapsackInstance& inst) {
  if (inst.m > 4) fail(errc::unsupported_dimension, "cone facets supported for m <= 4");
  ConeData cone;
  cone.m = inst.m;
  if (inst.m == 1) {
    bool pos = inst.a(0, 0) > 0; // pointedness forces a uniform sign
    cone.normals = IntMat(1, 1);
    cone.normals(0, 0) = pos ? 1 : -1;
    cone.support.push_back({});
    cone.denom = IntVec{pos ? inst.v[0] : Int(-inst.v[0])};
    if (cone.denom[0] <= 0) fail(errc::internal, "degenerate one-dimensional cone");
    return cone;
  }

  std::vector<IntVec> cols(inst.n);
  for (std::size_t j = 0; j < inst.n; ++j) cols[j] = inst.a.col(j);

  std::set<IntVec> seen;
  std::vector<IntVec> normals;
  std::size_t pick = inst.m - 1;
  std::vector<std::size_t> comb(pick);
  for (std::size_t i = 0; i < pick; ++i) comb[i] = i;
  bool more = inst.n >= pick;
  while (more) {
    IntMat sub(pick, inst.m);
    for (std::size_t r = 0; r < pick; ++r) sub.set_row(r, cols[comb[r]]);
    if (rank(sub) == pick) {
      IntMat ker = kernel_lattice(sub); // 1 x m, primitive
      IntVec u = ker.row(0);
      bool has_pos = false, has_neg = false;
      for (std::size_t j = 0; j < inst.n; ++j) {
        Int d = dot(u, cols[j]);
        if (d > 0) has_pos = true;
        if (d < 0) has_neg = true;
      }
      if (!(has_pos && has_neg)) {
        if (has_neg) u = scale(u, Int(-1));
        if (seen.insert(u).second) normals.push_back(u);
      }
    }
    more = false;
    std::size_t i = pick;
    while (i-- > 0) {
      if (comb[i] < i + (inst.n - pick)) {
        ++comb[i];
        for (std::size_t j = i + 1; j < pick; ++j) comb[j] = comb[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  if (normals.empty()) fail(errc::internal, "full-dimensional cone without facets");
  std::sort(normals.begin(), normals.end(), lex_less);
  cone.normals = from_rows(normals);
  cone.denom = IntVec(normals.size());
  for (std::size_t f = 0; f < normals.size(); ++f) {
    std::vector<std::size_t> sup;
    for (std::size_t j = 0; j < inst.n; ++j)
      if (dot(normals[f], cols[j]) == 0) sup.push_back(j);
    cone.support.push_back(std::move(sup));
    cone.denom[f] = dot(normals[f], inst.v);
    if (cone.denom[f] <= 0) fail(errc::internal, "column sum is not interior");
  }
  return cone;
}

Rat t_star(const ConeData& cone, const IntVec& b) {
  if (b.size() != cone.m) fail(errc::bad_input, "point dimension mismatch");
  Rat best;
  bool first = true;
  for (std::size_t f = 0; f < cone.normals.rows; ++f) {
    Int num = dot(cone.normals.row(f), b);
    if (num < 0) fail(errc::not_in_cone, "point lies outside the cone");
    Rat r = rat(num, cone.denom[f]);
    if (first || r < best) best = r;
    first = false;
  }
  return best;
}

Rat GBounds::upper() const {
  Rat u = det_bound.hi;
  if (jarnik.hi < u) u = jarnik.hi;
  if (ball && ball->hi < u) u = ball->hi;
  return u;
}

GBounds certified_upper_bound(const KnapsackInstance& inst, int bits) {
  std::size_t k = inst.n - inst.m;
  GBounds gb;
  RatIv w = ball_volume((unsigned)k, (unsigned)bits);
  Rat coef = Rat(Int(k) * pow_int(Int(2), (unsigned long)(k - 1)));
  RatIv c_iv = iv_div_pos(iv_point(coef), w);
  RatIv root = sqrt_iv(Rat(gram_det(inst.a)), (unsigned)bits);
  gb.det_bound = iv_mul_nonneg(c_iv, root);
  MinimaProfile prof = successive_minima(inst.kernel);
  RatIv sum = iv_point(Rat(0));
  for (const Int& s : prof.lambda_sq) sum = iv_add(sum, sqrt_iv(Rat(s), (unsigned)bits));
  gb.jarnik = iv_scale(sum, rat(1, 2));
  if (k <= 2) gb.ball = sqrt_iv(ball_covering_radius_sq(inst.kernel), (unsigned)bits);
  return gb;
}

namespace {

DiagFrobResult exact_g_m1(const KnapsackInstance& inst, const GBounds& gb,
                          std::uint64_t budget) {
  DiagFrobResult res;
  res.certified_upper = gb.upper();
  bool pos = inst.a(0, 0) > 0;
  IntVec gens(inst.n);
  for (std::size_t j = 0; j < inst.n; ++j)
    gens[j] = pos ? inst.a(0, j) : Int(-inst.a(0, j));
  Int f = frobenius_number(gens, budget);
  if (f < 0) {
    res.g = iv_point(Rat(0));
    res.exact = true;
    res.attained = true;
    return res;
  }
  Int norm1 = 0;
  for (const Int& e : gens) norm1 += e;
  res.g = iv_point(rat(f, norm1));
  res.exact = true;
  res.attained = false;
  res.witness = IntVec{pos ? f : Int(-f)};
  return res;
}

struct Cand {
  Rat t;
  IntVec b;
};

DiagFrobResult exact_g_m2(const KnapsackInstance& inst, const ConeData& cone,
                          const GBounds& gb, std::uint64_t budget) {
  DiagFrobResult res;
  res.certified_upper = gb.upper();
  if (cone.normals.rows != 2) fail(errc::internal, "planar cone must have two facets");
  Rat t_up = res.certified_upper;
  std::vector<Cand> cands;
  Rat best_t(0);

  for (std::size_t f = 0; f < 2; ++f) {
    std::size_t gidx = 1 - f;
    IntVec uf = cone.normals.row(f), ug = cone.normals.row(gidx);
    Int df = cone.denom[f], dg = cone.denom[gidx];
    IntVec d{-uf[1], uf[0]}; // primitive direction of the facet ray
    Int gd = dot(ug, d);
    if (gd == 0) fail(errc::internal, "coincident facet normals");
    if (gd < 0) {
      d = scale(d, Int(-1));
      gd = -gd;
    }
    if (cone.support[f].empty()) fail(errc::internal, "facet ray without generator");
    Int step(0);
    for (std::size_t j : cone.support[f]) {
      IntVec col = inst.a.col(j);
      std::size_t nz = (d[0] != 0) ? 0 : 1;
      Int alpha = col[nz] / d[nz];
      if (alpha <= 0 || col != scale(d, alpha))
        fail(errc::internal, "support generator off the facet ray");
      if (step == 0 || alpha < step) step = alpha;
    }
    if (step >= 2) cands.push_back({Rat(0), d}); // smallest unreachable ray point

    Int px, py;
    gcdext(uf[0], uf[1], px, py);
    IntVec p{px, py};

    Int cmax = floor_rat(t_up * Rat(df));
    for (Int c = cmax; c >= 1; --c) {
      Rat cap = rat(c, df);
      if (!cands.empty() && cap < best_t) break;
      IntVec cp = scale(p, c);
      Int cpg = dot(ug, cp);
      Int j0 = ceil_rat(rat(-cpg, gd));
      Int jplat = ceil_rat((rat(c * dg, df) - Rat(cpg)) / Rat(gd));
      if (jplat < j0) jplat = j0;
      auto point = [&](const Int& j) { return add(cp, scale(d, j)); };
      for (Int o = 0; o < step; ++o) {
        Int js = j0 + o;
        if (feasible(inst, point(js), budget).feasible) continue;
        Int jp = js;
        if (jplat > js) jp = js + ((jplat - js + step - 1) / step) * step;
        if (jp == js || !feasible(inst, point(jp), budget).feasible) {
          cands.push_back({cap, point(jp)});
          if (cap > best_t) best_t = cap;
          continue;
        }
        Int lo = js, hi = jp; // lo infeasible, hi feasible, class-aligned gap
        while (hi - lo > step) {
          Int mid = lo + (((hi - lo) / step) / 2) * step;
          if (feasible(inst, point(mid), budget).feasible)
            hi = mid;
          else
            lo = mid;
        }
        IntVec hole = point(lo);
        Rat t = rat(dot(ug, hole), dg);
        cands.push_back({t, hole});
        if (t > best_t) best_t = t;
      }
    }
  }

  res.exact = true;
  if (cands.empty()) {
    res.g = iv_point(Rat(0));
    res.attained = true;
    return res;
  }
  Rat g(0);
  for (const Cand& c : cands)
    if (c.t > g) g = c.t;
  const IntVec* w = nullptr;
  for (const Cand& c : cands)
    if (c.t == g && (!w || lex_less(c.b, *w))) w = &c.b;
  res.g = iv_point(g);
  res.attained = false;
  res.witness = *w;
  return res;
}

DiagFrobResult exact_g_window(const KnapsackInstance& inst, const ConeData& cone,
                              const GBounds& gb, std::uint64_t budget) {
  DiagFrobResult res;
  res.certified_upper = gb.upper();
  Int w;
  mpz_root(w.get_mpz_t(), Int(budget).get_mpz_t(), (unsigned long)inst.m);
  w = (w - 1) / 2;
  if (w < 1) w = 1;

  Rat g_lo(0);
  std::optional<IntVec> witness;
  IntVec b(inst.m);
  for (std::size_t i = 0; i < inst.m; ++i) b[i] = -w;
  bool holes = false;
  while (true) {
    bool inside = true;
    for (std::size_t f = 0; f < cone.normals.rows && inside; ++f)
      if (dot(cone.normals.row(f), b) < 0) inside = false;
    if (inside && !is_zero(b) && !feasible(inst, b, budget).feasible) {
      Rat t = t_star(cone, b);
      if (!holes || t > g_lo) {
        holes = true;
        g_lo = t;
        witness = b;
      } else if (t == g_lo && lex_less(b, *witness)) {
        witness = b;
      }
    }
    std::size_t i = 0;
    while (i < inst.m && b[i] == w) {
      b[i] = -w;
      ++i;
    }
    if (i == inst.m) break;
    ++b[i];
  }
  res.g = {g_lo, res.certified_upper};
  res.exact = false;
  res.attained = false;
  if (holes) res.witness = witness;
  return res;
}

} // namespace

DiagFrobResult exact_g(const KnapsackInstance& inst, std::uint64_t budget, int bits) {
  GBounds gb = certified_upper_bound(inst, bits);
  if (inst.m == 1) return exact_g_m1(inst, gb, budget);
  ConeData cone = cone_data(inst);
  if (inst.m == 2) return exact_g_m2(inst, cone, gb, budget);
  return exact_g_window(inst, cone, gb, budget);
}

bool is_hilbert_basis(const KnapsackInstance& inst, std::uint64_t budget) {
  DiagFrobResult r = exact_g(inst, budget);
  if (r.exact) return r.g.lo == 0 && r.attained;
  if (r.g.lo > 0) return false;
  fail(errc::inexact, "hole existence undecided within budget");
}

ThresholdReport interior_threshold(const KnapsackInstance& inst, const IntVec& w,
                              const Rat& g_upper, int bits) {
  ConeData cone = cone_data(inst);
  if (w.size() != inst.m) fail(errc::bad_input, "right-hand side dimension mismatch");
  for (std::size_t f = 0; f < cone.normals.rows; ++f)
    if (dot(cone.normals.row(f), w) <= 0)
      fail(errc::not_interior, "right-hand side is not strictly interior");

  ThresholdReport rep;
  rep.gamma_sq = rat(gram_det(inst.a), Int((unsigned long)(inst.n - inst.m + 1)));
  RatIv gamma = sqrt_iv(rep.gamma_sq, (unsigned)bits);
  if (g_upper < 0) fail(errc::bad_parameter, "negative upper bound");
  rep.threshold = iv_scale(gamma, g_upper);

  // vertices of P(A, w) = {x >= 0 : A x = w}
  RatVec wr(inst.m);
  for (std::size_t i = 0; i < inst.m; ++i) wr[i] = Rat(w[i]);
  std::vector<RatVec> verts;
  std::vector<std::size_t> comb(inst.m);
  for (std::size_t i = 0; i < inst.m; ++i) comb[i] = i;
  bool more = true;
  while (more) {
    IntMat blk(inst.m, inst.m);
    for (std::size_t r = 0; r < inst.m; ++r)
      for (std::size_t i = 0; i < inst.m; ++i) blk(r, i) = inst.a(r, comb[i]);
    if (det_bareiss(blk) != 0) {
      auto sol = solve_rational(blk, wr);
      if (sol) {
        bool ok = true;
        for (const Rat& e : *sol)
          if (e < 0) ok = false;
        if (ok) {
          RatVec x(inst.n, Rat(0));
          for (std::size_t i = 0; i < inst.m; ++i) x[comb[i]] = (*sol)[i];
          if (std::find(verts.begin(), verts.end(), x) == verts.end()) verts.push_back(x);
        }
      }
    }
    more = false;
    std::size_t i = inst.m;
    while (i-- > 0) {
      if (comb[i] < i + (inst.n - inst.m)) {
        ++comb[i];
        for (std::size_t j = i + 1; j < inst.m; ++j) comb[j] = comb[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  rep.vertex_count = verts.size();
  if (verts.size() < inst.n - inst.m + 1)
    fail(errc::internal, "interior right-hand side with too few vertices");
  rep.barycenter.assign(inst.n, Rat(0));
  for (const RatVec& x : verts)
    for (std::size_t j = 0; j < inst.n; ++j) rep.barycenter[j] += x[j];
  for (std::size_t j = 0; j < inst.n; ++j)
    rep.barycenter[j] /= Rat((unsigned long)verts.size());
  rep.center_check = true;
  for (std::size_t j = 0; j < inst.n && rep.center_check; ++j) {
    const Rat& c = rep.barycenter[j];
    if (!(c > 0) || c * c * rep.gamma_sq < 1) rep.center_check = false;
  }
  return rep;
}

} // namespace kf
