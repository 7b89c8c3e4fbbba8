#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <utility>

#include "covering.hpp"
#include "enclosure.hpp"
#include "error.hpp"
#include "hnf.hpp"
#include "lp.hpp"

namespace kf {

namespace {

// Vertices of the section {x >= 0 : mat x = mat 1}; mat has full row rank.
std::vector<RatVec> section_vertices(const IntMat& mat) {
  std::size_t r = mat.rows, n = mat.cols;
  RatVec rhs(r, Rat(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) rhs[i] += Rat(mat(i, j));
  std::vector<RatVec> verts;
  std::vector<std::size_t> comb(r);
  for (std::size_t i = 0; i < r; ++i) comb[i] = i;
  bool more = true;
  while (more) {
    IntMat blk(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) blk(i, j) = mat(i, comb[j]);
    if (det_bareiss(blk) != 0) {
      auto sol = solve_rational(blk, rhs);
      if (sol) {
        bool ok = true;
        for (const Rat& e : *sol)
          if (e < 0) ok = false;
        if (ok) {
          RatVec x(n, Rat(0));
          for (std::size_t j = 0; j < r; ++j) x[comb[j]] = (*sol)[j];
          if (std::find(verts.begin(), verts.end(), x) == verts.end())
            verts.push_back(std::move(x));
        }
      }
    }
    more = false;
    std::size_t i = r;
    while (i-- > 0) {
      if (comb[i] < i + (n - r)) {
        ++comb[i];
        for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
        more = true;
        break;
      }
    }
  }
  return verts;
}

Rat diameter_sq(const std::vector<RatVec>& verts) {
  Rat best(0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Rat d(0);
      for (std::size_t c = 0; c < verts[i].size(); ++c) {
        Rat e = verts[i][c] - verts[j][c];
        d += e * e;
      }
      if (d > best) best = d;
    }
  return best;
}

// Recession cone {x >= 0 : mat x = 0} trivial, so the section is bounded.
bool bounded_section(const IntMat& mat) {
  LpProblem p;
  p.maximize = true;
  p.c.assign(mat.cols, Rat(1));
  for (std::size_t i = 0; i < mat.rows; ++i) {
    RatVec row(mat.cols);
    for (std::size_t j = 0; j < mat.cols; ++j) row[j] = Rat(mat(i, j));
    p.rows.push_back(std::move(row));
    p.senses.push_back(LpSense::eq);
    p.rhs.push_back(Rat(0));
  }
  p.hi.assign(mat.cols, Rat(1));
  LpSolution s = lp_solve(p);
  return s.status == LpStatus::optimal && s.objective == 0;
}

std::vector<Int> flat_key(const IntMat& m) {
  std::vector<Int> key;
  key.reserve(m.a.size());
  for (const Int& e : m.a) key.push_back(e);
  return key;
}

IntMat single_row(const IntVec& v) {
  IntMat m(1, v.size());
  for (std::size_t c = 0; c < v.size(); ++c) m(0, c) = v[c];
  return m;
}

void spot_check_basis(const IntMat& basis, const DiagFrobResult& ref,
                      const SurveyOptions& opts, std::size_t idx) {
  IntMat t = basis;
  std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + idx + 1);
  if (t.rows == 1) {
    for (std::size_t c = 0; c < t.cols; ++c) t(0, c) = -t(0, c);
  } else {
    static const int coefs[4] = {-2, -1, 1, 2};
    for (std::size_t rep = 0; rep < 3 * t.rows; ++rep) {
      std::size_t i = rng() % t.rows;
      std::size_t j = rng() % t.rows;
      if (i == j) continue;
      int c = coefs[rng() % 4];
      for (std::size_t col = 0; col < t.cols; ++col) t(j, col) += c * t(i, col);
    }
  }
  KnapsackInstance inst = make_instance(t);
  DiagFrobResult r2 = exact_g(inst, opts.budget);
  if (!r2.exact || r2.g.lo != ref.g.lo || r2.attained != ref.attained)
    fail(errc::internal, "value changed under a unimodular basis change");
}

} // namespace

std::vector<IntMat> enumerate_family(const FamilyQuery& q, std::uint64_t budget) {
  if (q.m < 1 || q.n < 2 || q.m >= q.n) fail(errc::rank_config, "need 1 <= m < n");
  if (q.n > 8) fail(errc::unsupported_dimension, "n above enumeration scope");
  if (q.t_cap <= 0) fail(errc::bad_parameter, "positive covolume cap required");
  Rat cap_sq = q.t_cap * q.t_cap;
  LatticeBasis zn = make_lattice(IntMat::identity(q.n));

  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> keys;
  std::vector<IntMat> mats;
  auto push = [&](const IntMat& basis) {
    IntMat h = row_hnf(basis);
    std::vector<Int> key = flat_key(h);
    if (seen.insert(key).second) {
      keys.push_back(std::move(key));
      mats.push_back(std::move(h));
    }
  };

  if (q.m == 1 || q.m + 1 == q.n) {
    Rat side = 2 * q.t_cap + 1;
    Rat est = pow_rat(side, (unsigned long)q.n);
    if (est > 20000000)
      fail(errc::too_large,
           "estimated " + floor_rat(est).get_str() + " lattice points to scan");
    Int bsq = floor_rat(cap_sq);
    for (const IntVec& v : vectors_up_to(zn, bsq, budget)) {
      if (gcd_vec(v) != 1) continue;
      IntMat row = single_row(v);
      push(q.m == 1 ? row : kernel_lattice(row));
    }
  } else {
    unsigned long k = (unsigned long)(q.n - q.m);
    RatIv om = ball_volume((unsigned)k, 96);
    Rat lam_cap = Rat(pow_int(Int(2), k)) * q.t_cap / om.lo;
    Rat side = 2 * lam_cap + 1;
    Rat est = pow_rat(side, (unsigned long)q.n);
    if (est > 20000000)
      fail(errc::too_large,
           "estimated " + floor_rat(est).get_str() + " lattice points to scan");
    Int vb = ceil_rat(lam_cap * lam_cap);
    std::vector<IntVec> vs = vectors_up_to(zn, vb, budget);
    double subsets = 0;
    if (vs.size() >= k) {
      subsets = 1;
      for (unsigned long i = 0; i < k; ++i)
        subsets *= double(vs.size() - i) / double(i + 1);
    }
    if (subsets > 4e6)
      fail(errc::too_large, "estimated " + std::to_string((long long)subsets) +
                                " spanning subsets to scan");
    std::vector<std::size_t> comb(k);
    for (unsigned long i = 0; i < k; ++i) comb[i] = i;
    bool more = vs.size() >= k;
    while (more) {
      std::vector<IntVec> rows;
      rows.reserve(k);
      for (unsigned long i = 0; i < k; ++i) rows.push_back(vs[comb[i]]);
      IntMat rm = from_rows(rows);
      if (rank(rm) == k) {
        IntMat sat = saturate_rows(rm);
        if (Rat(gram_det(sat)) <= cap_sq) push(kernel_lattice(sat));
      }
      more = false;
      std::size_t i = k;
      while (i-- > 0) {
        if (comb[i] < i + (vs.size() - k)) {
          ++comb[i];
          for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }

  // canonical order independent of the production route
  std::vector<std::size_t> order(mats.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return keys[x] < keys[y];
  });
  std::vector<IntMat> out;
  out.reserve(mats.size());
  for (std::size_t i : order) out.push_back(std::move(mats[i]));
  return out;
}

SurveyResult survey(const FamilyQuery& q, const SurveyOptions& opts) {
  SurveyResult res;
  std::vector<IntMat> fam = enumerate_family(q, opts.family_budget);
  res.enumerated = fam.size();
  unsigned k = (unsigned)(q.n - q.m);
  std::size_t exact_seen = 0;
  for (std::size_t idx = 0; idx < fam.size(); ++idx) {
    ExperimentRecord rec;
    rec.m = q.m;
    rec.n = q.n;
    rec.basis = fam[idx];
    rec.det_sq = gram_det(rec.basis);
    bool conforming = true;
    try {
      validate_matrix(rec.basis);
    } catch (const error& e) {
      if (e.code == errc::cone_not_pointed || e.code == errc::not_primitive ||
          e.code == errc::rank_config || e.code == errc::rank_deficient)
        conforming = false;
      else
        throw;
    }
    if (!conforming) {
      rec.filtered = true;
      ++res.discarded;
      if (q.filter == FamilyFilter::all) res.records.push_back(std::move(rec));
      continue;
    }
    KnapsackInstance inst = make_instance(rec.basis);
    DiagFrobResult r = exact_g(inst, opts.budget);
    rec.g = r.g.lo;
    rec.attained = r.attained;
    rec.exact = r.exact;
    rec.x = rec.g.get_d() / std::exp(std::log(rec.det_sq.get_d()) / (2.0 * k));
    if (opts.spot_check_every && rec.exact &&
        (++exact_seen % opts.spot_check_every) == 0)
      spot_check_basis(rec.basis, r, opts, idx);
    res.records.push_back(std::move(rec));
  }
  return res;
}

void write_survey_csv(const SurveyResult& res, std::ostream& os) {
  os << "m,n,det_sq,g_num,g_den,X_float64,attained,filtered,exact\n";
  char buf[48];
  for (const ExperimentRecord& r : res.records) {
    std::snprintf(buf, sizeof(buf), "%.17g", r.x);
    os << r.m << ',' << r.n << ',' << r.det_sq.get_str() << ','
       << r.g.get_num().get_str() << ',' << r.g.get_den().get_str() << ','
       << buf << ',' << int(r.attained) << ',' << int(r.filtered) << ','
       << int(r.exact) << '\n';
  }
}

std::vector<std::pair<double, double>> survival_table(
    const std::vector<ExperimentRecord>& recs, const std::vector<double>& grid) {
  if (recs.empty()) fail(errc::insufficient_data, "no records");
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (double t : grid) {
    std::size_t c = 0;
    for (const ExperimentRecord& r : recs)
      if (r.x > t) ++c;
    out.emplace_back(t, double(c) / double(recs.size()));
  }
  return out;
}

TailFit tail_fit(const std::vector<std::pair<double, double>>& table, double t_min) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& e : table)
    if (e.first >= t_min && e.first > 0 && e.second > 0)
      pts.emplace_back(std::log(e.first), std::log(e.second));
  if (pts.size() < 2)
    fail(errc::insufficient_data, "too few survival points above t_min");
  double n = double(pts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    sx += p.first;
    sy += p.second;
    sxx += p.first * p.first;
    sxy += p.first * p.second;
  }
  double den = sxx - sx * sx / n;
  if (!(den > 0)) fail(errc::insufficient_data, "degenerate fit window");
  TailFit f;
  f.slope = (sxy - sx * sy / n) / den;
  f.intercept = (sy - f.slope * sx) / n;
  f.t_min = t_min;
  f.points = pts.size();
  return f;
}

TailFit survey_tail_fit(const std::vector<ExperimentRecord>& recs) {
  if (recs.size() < 500)
    fail(errc::insufficient_data, "need at least 500 records");
  std::vector<double> xs;
  xs.reserve(recs.size());
  for (const ExperimentRecord& r : recs) xs.push_back(r.x);
  std::sort(xs.begin(), xs.end());
  double pct = xs[(3 * xs.size()) / 4];
  std::vector<double> grid;
  for (double x : xs)
    if (x > 0) grid.push_back(x);
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.size() < 8)
    fail(errc::insufficient_data, "too few distinct positive values");
  double t_min = std::max(pct, grid.front());
  return tail_fit(survival_table(recs, grid), t_min);
}

double normalized_mean(const std::vector<ExperimentRecord>& recs) {
  if (recs.empty()) fail(errc::insufficient_data, "no records");
  double s = 0;
  for (const ExperimentRecord& r : recs) s += r.x;
  return s / double(recs.size());
}

MeanStability mean_stability(const FamilyQuery& q, const Rat& t1, const Rat& t2,
                             const SurveyOptions& opts) {
  if (t1 <= 0 || t2 <= 0 || t1 >= t2) fail(errc::bad_parameter, "need 0 < t1 < t2");
  FamilyQuery q1 = q;
  q1.t_cap = t1;
  FamilyQuery q2 = q;
  q2.t_cap = t2;
  MeanStability ms;
  ms.mean_low = normalized_mean(survey(q1, opts).records);
  ms.mean_high = normalized_mean(survey(q2, opts).records);
  if (ms.mean_low > 0 && ms.mean_high > 0)
    ms.ratio = std::max(ms.mean_low, ms.mean_high) /
               std::min(ms.mean_low, ms.mean_high);
  return ms;
}

AdversarialSequence adversarial_sequence(std::size_t m, std::size_t n,
                                         std::size_t count, std::uint64_t budget) {
  if (count > 10) fail(errc::bad_parameter, "count above 10");
  AdversarialSequence res;
  res.m = m;
  res.n = n;
  IntVec winf, rvec;
  bool dual = false;
  if (m == 1 && n == 3) {
    res.s_basis = IntMat{{1, -1, 0}, {0, 1, -1}};
    winf = IntVec{Int(1), Int(1), Int(1)};
    rvec = IntVec{Int(0), Int(0), Int(1)};
    res.constant = rat(1, 30);
  } else if (m == 2 && n == 3) {
    res.s_basis = IntMat{{1, -1, 0}};
    winf = IntVec{Int(1), Int(-1), Int(0)};
    rvec = IntVec{Int(0), Int(0), Int(1)};
    res.constant = rat(1, 16);
    dual = true;
  } else {
    fail(errc::unsupported_dimension, "generator covers (1,3) and (2,3)");
  }

  unsigned long k = (unsigned long)(n - m);
  MinimaProfile seed_prof = successive_minima(make_lattice(res.s_basis), budget);
  IntMat nmat = kernel_lattice(res.s_basis);
  if (!bounded_section(nmat))
    fail(errc::construction_failed, "seed section is unbounded");
  Rat diam_qs_sq = diameter_sq(section_vertices(nmat));
  if (diam_qs_sq == 0) fail(errc::construction_failed, "seed section degenerate");

  Rat lam_prod_sq(1);
  for (unsigned long i = 0; i + 1 < k; ++i) lam_prod_sq *= Rat(seed_prof.lambda_sq[i]);
  RatIv xi_den = iv_mul_nonneg(iv_point(Rat(factorial(k))), ball_volume((unsigned)k, 96));
  xi_den = iv_mul_nonneg(xi_den, sqrt_iv(diam_qs_sq, 96));
  xi_den = iv_mul_nonneg(xi_den, sqrt_iv(lam_prod_sq, 96));
  RatIv xi_iv = iv_div_pos(iv_point(Rat(pow_int(Int(2), k - 1))), xi_den);

  Int prev_det(-1);
  std::uint64_t attempts = 0, max_attempts = 40 + 20 * (std::uint64_t)count;
  for (Int t(1); res.terms.size() < count; ++t) {
    if (++attempts > max_attempts)
      fail(errc::construction_failed, "no certifiable terms in the scan window");
    IntVec w(n);
    for (std::size_t c = 0; c < n; ++c) w[c] = t * winf[c] + rvec[c];
    if (gcd_vec(w) != 1) continue;
    IntMat wrow = single_row(w);
    IntMat at = row_hnf(dual ? kernel_lattice(wrow) : wrow);
    std::optional<KnapsackInstance> inst;
    try {
      inst.emplace(make_instance(at));
    } catch (const error&) {
      continue;
    }
    AdversarialTerm term;
    term.t = t;
    term.a = at;
    term.det_sq = gram_det(at);
    term.p1 = Rat(term.det_sq) > Rat(Int(t * t));
    term.minima_match = true;
    if (k >= 2) {
      LatticeBasis lt = dual ? make_lattice(wrow) : inst->kernel;
      MinimaProfile pt = successive_minima(lt, budget);
      for (unsigned long i = 0; i + 1 < k; ++i)
        if (pt.lambda_sq[i] != seed_prof.lambda_sq[i]) term.minima_match = false;
    }
    Rat dq = diameter_sq(section_vertices(inst->a));
    term.p2 = Rat(4) * dq < Rat(9) * diam_qs_sq;
    DiagFrobResult rg = exact_g(*inst, budget);
    term.g_lower = rg.g.lo;
    term.g_exact = rg.exact;
    if (!(term.p1 && term.p2 && term.minima_match && term.g_lower > 0)) continue;
    if (term.det_sq <= prev_det) continue;
    prev_det = term.det_sq;
    double sd = std::sqrt(term.det_sq.get_d());
    term.xi = xi_iv.mid_double();
    term.diam_qt = term.xi * sd * std::sqrt(dq.get_d());
    term.lower_bound = term.xi * sd - 1.0;
    term.ratio = term.g_lower.get_d() / sd;
    term.ratio_ok =
        term.g_lower * term.g_lower >= res.constant * res.constant * Rat(term.det_sq);
    res.terms.push_back(std::move(term));
  }
  return res;
}

DirectionSequence direction_sequence(const RatVec& alpha, std::size_t count,
                                     const Rat& ratio_floor, std::uint64_t budget) {
  std::size_t n = alpha.size() + 1;
  if (alpha.size() < 2) fail(errc::bad_direction, "need at least two coordinates");
  if (n > 8) fail(errc::unsupported_dimension, "n above enumeration scope");
  Rat prev(0);
  for (const Rat& x : alpha) {
    if (!(x > prev)) fail(errc::bad_direction, "coordinates must increase strictly from 0");
    prev = x;
  }
  if (!(prev < 1)) fail(errc::bad_direction, "coordinates must stay below 1");

  Int q(1);
  for (const Rat& x : alpha) q = lcm(q, x.get_den());
  IntVec base(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rat e = alpha[i] * Rat(q);
    base[i] = e.get_num();
  }
  base[n - 1] = q;
  Int g = gcd_vec(base);
  for (Int& e : base) e /= g;

  DirectionSequence seq;
  seq.base = base;
  seq.ratio_floor = ratio_floor;
  LatticeBasis lam = make_lattice(kernel_lattice(single_row(base)));
  MinimaProfile prof = successive_minima(lam, budget);
  seq.base_minima_sq = prof.lambda_sq;

  IntMat wit(n - 2, n);
  for (std::size_t r = 0; r + 2 < n; ++r)
    for (std::size_t c = 0; c < n; ++c) wit(r, c) = prof.witnesses(r, c);
  LatticeBasis plane = make_lattice(kernel_lattice(wit));
  if (plane.k != 2) fail(errc::internal, "witness complement is not a plane");
  RatVec av(n);
  for (std::size_t i = 0; i < n; ++i) av[i] = Rat(base[i]);
  RatVec co = coords_in_basis(plane, av);
  for (const Rat& c : co)
    if (c.get_den() != 1) fail(errc::internal, "base vector escapes the plane lattice");
  Int s, u;
  if (gcdext(co[0].get_num(), co[1].get_num(), s, u) != 1)
    fail(errc::internal, "base vector imprimitive in the plane lattice");
  // complete (coords, (-u, s)) to a unimodular pair
  IntVec rvec(n, Int(0));
  for (std::size_t c = 0; c < n; ++c)
    rvec[c] = -u * plane.basis(0, c) + s * plane.basis(1, c);

  std::uint64_t attempts = 0, max_attempts = 64 * (std::uint64_t)count + 64;
  for (Int t(1); seq.terms.size() < count; ++t) {
    if (++attempts > max_attempts)
      fail(errc::construction_failed, "no terms with positive excess in the scan window");
    IntVec a(n);
    bool pos = true;
    for (std::size_t c = 0; c < n; ++c) {
      a[c] = t * base[c] + rvec[c];
      if (a[c] <= 0) pos = false;
    }
    if (!pos || gcd_vec(a) != 1) continue;
    bool last_max = true;
    for (std::size_t c = 0; c + 1 < n; ++c)
      if (a[c] >= a[n - 1]) last_max = false;
    if (!last_max) continue;
    Int f = frobenius_number(a, budget);
    if (f < 0) continue;
    Rat excess = Rat(f) - Rat(one_norm(a));
    if (!(excess > 0)) continue;
    DirectionTerm term;
    term.t = t;
    term.a = a;
    term.f = f;
    term.norm_sq = norm_sq(a);
    term.excess = excess;
    term.excess_ratio = excess / Rat(term.norm_sq);
    term.ratio_ok = term.excess_ratio >= ratio_floor;
    Rat err(0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Rat d = alpha[i] - rat(a[i], a[n - 1]);
      err += d * d;
    }
    term.direction_err_sq = err;
    MinimaProfile pt = successive_minima(make_lattice(kernel_lattice(single_row(a))), budget);
    term.minima_match = true;
    for (std::size_t i = 0; i + 2 < n; ++i)
      if (pt.lambda_sq[i] != prof.lambda_sq[i]) term.minima_match = false;
    seq.terms.push_back(std::move(term));
  }
  return seq;
}

KannanReport kannan_check(const IntVec& a, std::uint64_t budget, int bits) {
  std::size_t n = a.size();
  if (n < 2 || n > 3)
    fail(errc::unsupported_rank, "kernel covering is exact only for n in {2, 3}");
  for (const Int& e : a)
    if (e <= 0) fail(errc::bad_input, "entries must be positive");
  if (gcd_vec(a) != 1) fail(errc::not_primitive, "entries share a factor");
  KannanReport rep;
  rep.a = a;
  rep.f = frobenius_number(a, budget);
  Rat onen(one_norm(a));
  rep.plus_form = Rat(rep.f) + onen;
  rep.minus_form = Rat(rep.f) - onen;
  if (rep.f < 0) {
    rep.skipped = true;
    return rep;
  }
  Polytope s;
  s.verts.assign(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) s.verts[i][i] = rat(Int(1), a[i]);
  LatticeBasis lat = make_lattice(kernel_lattice(single_row(a)));
  MuResult mu = inhomogeneous_minimum(s, lat, MuMode::exact, 8, bits, budget);
  rep.mu = mu.value;
  rep.mu_exact = mu.exact;
  rep.matches_plus = mu.value.lo <= rep.plus_form && rep.plus_form <= mu.value.hi;
  rep.matches_minus = mu.value.lo <= rep.minus_form && rep.minus_form <= mu.value.hi;
  return rep;
}

} // namespace kf
