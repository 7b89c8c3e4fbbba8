#include "lp.hpp"

#include "error.hpp"

namespace kf {

namespace {

struct Tableau {
  std::vector<RatVec> rows; // width ncols+1, last entry is rhs
  RatVec cost;              // width ncols+1, last entry is -objective
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rat p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      Rat f = rows[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    Rat f = cost[c];
    if (f != 0)
      for (std::size_t j = 0; j <= ncols; ++j) cost[j] -= f * rows[r][j];
    basis[r] = c;
  }

  // Bland's rule: entering = lowest eligible column, leaving = min ratio
  // with lowest basic index on ties. Returns false when unbounded.
  bool run(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed_cols) return true;
      std::size_t leave = rows.size();
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i].back() / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

} // namespace

LpSolution lp_solve(const LpProblem& p) {
  std::size_t n = p.c.size(), m = p.rows.size();
  if (p.senses.size() != m || p.rhs.size() != m)
    fail(errc::bad_input, "lp: row/sense/rhs count mismatch");
  for (auto& r : p.rows)
    if (r.size() != n) fail(errc::bad_input, "lp: row width mismatch");
  std::vector<std::optional<Rat>> lo(n, Rat(0)), hi(n, std::nullopt);
  if (!p.lo.empty()) {
    if (p.lo.size() != n) fail(errc::bad_input, "lp: lo size mismatch");
    lo = p.lo;
  }
  if (!p.hi.empty()) {
    if (p.hi.size() != n) fail(errc::bad_input, "lp: hi size mismatch");
    hi = p.hi;
  }

  // shift bounded-below variables to x' = x - lo >= 0, split free ones
  struct Col {
    std::size_t pos = 0, neg = 0;
    bool split = false;
    Rat shift;
  };
  std::vector<Col> map(n);
  std::size_t cols = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (lo[i] && hi[i] && *hi[i] < *lo[i]) return {LpStatus::infeasible, Rat(0), {}};
    if (lo[i]) {
      map[i].pos = cols++;
      map[i].shift = *lo[i];
    } else {
      map[i].split = true;
      map[i].pos = cols++;
      map[i].neg = cols++;
    }
  }

  std::vector<RatVec> rws;
  std::vector<LpSense> sns;
  RatVec rhs;
  auto add_row = [&](const RatVec& coef, LpSense s, Rat b) {
    RatVec r(cols, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (coef[i] == 0) continue;
      r[map[i].pos] += coef[i];
      if (map[i].split)
        r[map[i].neg] -= coef[i];
      else
        b -= coef[i] * map[i].shift;
    }
    rws.push_back(std::move(r));
    sns.push_back(s);
    rhs.push_back(b);
  };
  for (std::size_t k = 0; k < m; ++k) add_row(p.rows[k], p.senses[k], p.rhs[k]);
  for (std::size_t i = 0; i < n; ++i)
    if (hi[i]) {
      RatVec e(n, Rat(0));
      e[i] = 1;
      add_row(e, LpSense::le, *hi[i]);
    }

  RatVec ocost(cols, Rat(0));
  Rat oconst(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rat ci = p.c[i];
    if (p.maximize) ci = -ci;
    if (ci == 0) continue;
    ocost[map[i].pos] += ci;
    if (map[i].split)
      ocost[map[i].neg] -= ci;
    else
      oconst += ci * map[i].shift;
  }

  std::size_t nrows = rws.size();
  for (std::size_t k = 0; k < nrows; ++k)
    if (rhs[k] < 0) {
      for (auto& v : rws[k]) v = -v;
      rhs[k] = -rhs[k];
      if (sns[k] == LpSense::le)
        sns[k] = LpSense::ge;
      else if (sns[k] == LpSense::ge)
        sns[k] = LpSense::le;
    }
  std::size_t slack0 = cols;
  std::size_t nslack = 0;
  for (auto s : sns)
    if (s != LpSense::eq) ++nslack;
  std::size_t art0 = slack0 + nslack;
  std::size_t total = art0 + nrows;

  Tableau t;
  t.ncols = total;
  t.basis.assign(nrows, 0);
  t.rows.assign(nrows, RatVec(total + 1, Rat(0)));
  std::size_t si = 0;
  for (std::size_t k = 0; k < nrows; ++k) {
    for (std::size_t j = 0; j < cols; ++j) t.rows[k][j] = rws[k][j];
    if (sns[k] == LpSense::le)
      t.rows[k][slack0 + si++] = 1;
    else if (sns[k] == LpSense::ge)
      t.rows[k][slack0 + si++] = -1;
    t.rows[k][art0 + k] = 1;
    t.rows[k][total] = rhs[k];
    t.basis[k] = art0 + k;
  }

  // phase 1: minimize the artificial sum from the all-artificial basis
  t.cost.assign(total + 1, Rat(0));
  for (std::size_t j = 0; j <= total; ++j) {
    if (j >= art0 && j < total) continue;
    Rat colsum(0);
    for (std::size_t k = 0; k < nrows; ++k) colsum += t.rows[k][j];
    t.cost[j] = -colsum;
  }
  if (!t.run(total)) fail(errc::internal, "lp: phase 1 unbounded");
  if (t.cost[total] < 0) return {LpStatus::infeasible, Rat(0), {}};

  // drive remaining artificials out of the basis, dropping redundant rows
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < art0) continue;
    std::size_t c = art0;
    for (std::size_t j = 0; j < art0; ++j)
      if (t.rows[i][j] != 0) {
        c = j;
        break;
      }
    if (c == art0) {
      t.rows.erase(t.rows.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --i;
    } else {
      t.pivot(i, c);
    }
  }

  // phase 2: truncate artificial columns, install the real objective
  for (auto& r : t.rows) {
    r[art0] = r[total];
    r.resize(art0 + 1);
  }
  t.ncols = art0;
  t.cost.assign(art0 + 1, Rat(0));
  for (std::size_t j = 0; j < cols; ++j) t.cost[j] = ocost[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Rat f = t.cost[t.basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= art0; ++j) t.cost[j] -= f * t.rows[i][j];
  }
  if (!t.run(art0)) return {LpStatus::unbounded, Rat(0), {}};

  RatVec y(art0, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < art0) y[t.basis[i]] = t.rows[i].back();
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (map[i].split)
      x[i] = y[map[i].pos] - y[map[i].neg];
    else
      x[i] = y[map[i].pos] + map[i].shift;
  }
  Rat val = -t.cost[art0] + oconst;
  if (p.maximize) val = -val;
  return {LpStatus::optimal, val, x};
}

bool lp_cone_feasible(const IntMat& m, const IntVec& b) {
  if (b.size() != m.rows) fail(errc::bad_input, "cone_feasible: rhs size mismatch");
  LpProblem p;
  p.maximize = false;
  p.c.assign(m.cols, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    RatVec r(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = Rat(m(i, j));
    p.rows.push_back(std::move(r));
    p.senses.push_back(LpSense::eq);
    p.rhs.push_back(Rat(b[i]));
  }
  return lp_solve(p).status == LpStatus::optimal;
}

} // namespace kf
