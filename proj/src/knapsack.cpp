#include "knapsack.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "error.hpp"
#include "lp.hpp"

namespace kf {

void validate_matrix(const IntMat& a) {
  if (a.rows < 1 || a.rows >= a.cols) fail(errc::rank_config, "need 1 <= m < n");
  if (rank(a) != a.rows) fail(errc::rank_config, "matrix is not full row rank");
  if (minor_gcd(a) != 1) fail(errc::not_primitive, "maximal minors have gcd != 1");
  LpProblem p; // pointedness: max sum x over Ax = 0, 0 <= x <= 1
  p.maximize = true;
  p.c.assign(a.cols, Rat(1));
  for (std::size_t i = 0; i < a.rows; ++i) {
    RatVec row(a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) row[j] = Rat(a(i, j));
    p.rows.push_back(std::move(row));
    p.senses.push_back(LpSense::eq);
    p.rhs.push_back(Rat(0));
  }
  p.hi.assign(a.cols, Rat(1));
  LpSolution s = lp_solve(p);
  if (s.status != LpStatus::optimal) fail(errc::internal, "pointedness probe failed");
  if (s.objective > 0) fail(errc::cone_not_pointed, "kernel meets the nonnegative orthant");
}

KnapsackInstance make_instance(const IntMat& a) {
  validate_matrix(a);
  KnapsackInstance inst;
  inst.m = a.rows;
  inst.n = a.cols;
  inst.a = a;
  inst.v = IntVec(inst.m, Int(0));
  for (std::size_t i = 0; i < inst.m; ++i)
    for (std::size_t j = 0; j < inst.n; ++j) inst.v[i] += a(i, j);
  inst.h = hnf(a);
  inst.kernel = lll_reduce(make_lattice(kernel_lattice(a)));

  std::size_t k = inst.n - inst.m;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  bool more = true;
  while (more) {
    IntMat blk(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < k; ++i) blk(r, i) = inst.kernel.basis(i, comb[r]);
    if (auto inv = inverse_rational(blk)) inst.corners.push_back({comb, *inv});
    more = false;
    std::size_t i = k;
    while (i-- > 0) {
      if (comb[i] < i + (inst.n - k)) {
        ++comb[i];
        for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  return inst;
}

FeasibilityOutcome feasible(const KnapsackInstance& inst, const IntVec& b,
                            std::uint64_t budget) {
  if (b.size() != inst.m) fail(errc::bad_input, "right-hand side dimension mismatch");
  FeasibilityOutcome out;
  auto z0 = solve_diophantine(inst.h, b);
  if (!z0) return out; // b is off the image lattice
  const IntVec& z = *z0;
  std::size_t k = inst.n - inst.m;
  const IntMat& kb = inst.kernel.basis;

  auto value_at = [&](const IntVec& t) {
    IntVec x = z;
    for (std::size_t i = 0; i < k; ++i)
      if (t[i] != 0)
        for (std::size_t j = 0; j < inst.n; ++j) x[j] += t[i] * kb(i, j);
    return x;
  };
  auto nonneg = [](const IntVec& x) {
    for (const Int& e : x)
      if (e < 0) return false;
    return true;
  };

  // Vertices of {t real : z + t K >= 0}; bounded because the cone is pointed.
  std::vector<RatVec> verts;
  for (const auto& c : inst.corners) {
    RatVec y(k, Rat(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t r = 0; r < k; ++r) y[i] += c.inv[i][r] * Rat(-z[c.cols[r]]);
    bool ok = true;
    for (std::size_t j = 0; j < inst.n && ok; ++j) {
      Rat s(z[j]);
      for (std::size_t i = 0; i < k; ++i) s += y[i] * Rat(kb(i, j));
      if (s < 0) ok = false;
    }
    if (ok) verts.push_back(std::move(y));
  }
  if (verts.empty()) return out; // even the real relaxation is empty

  IntVec lo(k), hi(k), tc(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rat mn = verts[0][i], mx = verts[0][i], sum(0);
    for (const RatVec& y : verts) {
      if (y[i] < mn) mn = y[i];
      if (y[i] > mx) mx = y[i];
      sum += y[i];
    }
    lo[i] = ceil_rat(mn);
    hi[i] = floor_rat(mx);
    if (lo[i] > hi[i]) return out;
    tc[i] = round_rat(sum / Rat((unsigned long)verts.size()));
    if (tc[i] < lo[i]) tc[i] = lo[i];
    if (tc[i] > hi[i]) tc[i] = hi[i];
  }

  out.nodes = 1;
  {
    IntVec x = value_at(tc);
    if (nonneg(x)) {
      out.feasible = true;
      out.witness = std::move(x);
      return out;
    }
  }
  IntVec t = lo;
  while (true) {
    if (t != tc) {
      if (++out.nodes > budget) fail(errc::budget_exceeded, "feasibility search budget exhausted");
      IntVec x = value_at(t);
      if (nonneg(x)) {
        out.feasible = true;
        out.witness = std::move(x);
        return out;
      }
    }
    std::size_t i = 0;
    while (i < k && t[i] == hi[i]) {
      t[i] = lo[i];
      ++i;
    }
    if (i == k) break;
    ++t[i];
  }
  return out;
}

Int frobenius_number(const IntVec& a, std::uint64_t budget) {
  if (a.empty()) fail(errc::bad_input, "empty generator list");
  for (const Int& e : a)
    if (e <= 0) fail(errc::bad_input, "generators must be positive");
  if (gcd_vec(a) != 1) fail(errc::bad_input, "generators must have gcd 1");
  Int amin = a[0];
  for (const Int& e : a)
    if (e < amin) amin = e;
  if (amin == 1) return Int(-1);
  if (!amin.fits_ulong_p() || amin.get_ui() > budget)
    fail(errc::budget_exceeded, "residue table exceeds budget");
  std::size_t s = (std::size_t)amin.get_ui();

  std::vector<Int> dist(s, Int(-1));
  using QE = std::pair<Int, std::size_t>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
  dist[0] = 0;
  pq.push({Int(0), 0});
  while (!pq.empty()) {
    auto [d, r] = pq.top();
    pq.pop();
    if (d != dist[r]) continue;
    for (const Int& g : a) {
      if (g == amin) continue;
      std::size_t nr = (r + Int(g % amin).get_ui()) % s;
      Int nd = d + g;
      if (dist[nr] < 0 || nd < dist[nr]) {
        dist[nr] = nd;
        pq.push({nd, nr});
      }
    }
  }
  Int top(0);
  for (const Int& d : dist) {
    if (d < 0) fail(errc::internal, "residue class unreachable despite gcd 1");
    if (d > top) top = d;
  }
  return top - amin;
}

LineProfile line_feasibility_profile(const KnapsackInstance& inst, const IntVec& w,
                                     std::size_t kmax, std::uint64_t budget) {
  if (w.size() != inst.m) fail(errc::bad_input, "direction dimension mismatch");
  if (is_zero(w)) fail(errc::bad_input, "direction must be nonzero");
  LineProfile prof;
  prof.feasible.resize(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    IntVec b(inst.m);
    for (std::size_t i = 0; i < inst.m; ++i) b[i] = Int((unsigned long)k) * w[i];
    prof.feasible[k] = feasible(inst, b, budget).feasible;
  }
  std::size_t k0 = kmax + 1;
  for (std::size_t k = kmax + 1; k-- > 0;) {
    if (!prof.feasible[k]) break;
    k0 = k;
  }
  if (k0 <= kmax) prof.threshold = k0;
  return prof;
}

} // namespace kf
