#include "lattice.hpp"

#include <algorithm>

#include "enclosure.hpp"
#include "error.hpp"
#include "hnf.hpp"

namespace kf {

namespace {

struct GramSchmidt {
  std::vector<RatVec> mu; // mu[i][j], j < i
  RatVec bstar_sq;        // squared norms of the orthogonalized rows
};

GramSchmidt gs_from_gram(const IntMat& g) {
  std::size_t k = g.rows;
  GramSchmidt out;
  out.mu.assign(k, RatVec(k, Rat(0)));
  out.bstar_sq.assign(k, Rat(0));
  std::vector<RatVec> r(k, RatVec(k, Rat(0))); // r[i][j] = <b_i, b*_j>
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rat v(g(i, j));
      for (std::size_t l = 0; l < j; ++l) v -= out.mu[j][l] * r[i][l];
      r[i][j] = v;
      if (out.bstar_sq[j] == 0) fail(errc::rank_deficient, "dependent rows");
      out.mu[i][j] = v / out.bstar_sq[j];
    }
    Rat s(g(i, i));
    for (std::size_t j = 0; j < i; ++j) s -= out.mu[i][j] * r[i][j];
    out.bstar_sq[i] = s;
  }
  if (k > 0 && out.bstar_sq[k - 1] == 0) fail(errc::rank_deficient, "dependent rows");
  return out;
}

void row_submul(IntMat& m, std::size_t i, std::size_t j, const Int& q) {
  for (std::size_t c = 0; c < m.cols; ++c) m(i, c) -= q * m(j, c);
}

} // namespace

LatticeBasis make_lattice(const IntMat& rows) {
  if (rows.rows == 0 || rows.cols == 0) fail(errc::bad_input, "empty basis");
  if (rows.rows > rows.cols) fail(errc::rank_deficient, "more rows than ambient dimension");
  LatticeBasis l;
  l.n = rows.cols;
  l.k = rows.rows;
  l.basis = rows;
  l.gram = gram(rows);
  l.det_sq = det_bareiss(l.gram);
  if (l.det_sq <= 0) fail(errc::rank_deficient, "basis rows are dependent");
  return l;
}

IntMat lll_reduce_rows(const IntMat& rows, const Rat& delta) {
  if (delta <= rat(1, 4) || delta >= 1) fail(errc::bad_parameter, "delta outside (1/4, 1)");
  IntMat b = rows;
  std::size_t k = b.rows;
  if (k <= 1) return b;
  GramSchmidt g = gs_from_gram(gram(b));
  auto reduce = [&](std::size_t i, std::size_t j) {
    Int q = round_rat(g.mu[i][j]);
    if (q != 0) {
      row_submul(b, i, j, q);
      g = gs_from_gram(gram(b));
    }
  };
  std::size_t i = 1;
  while (i < k) {
    reduce(i, i - 1);
    if (g.bstar_sq[i] >= (delta - g.mu[i][i - 1] * g.mu[i][i - 1]) * g.bstar_sq[i - 1]) {
      for (std::size_t j = i - 1; j-- > 0;) reduce(i, j);
      ++i;
    } else {
      IntVec tmp = b.row(i);
      b.set_row(i, b.row(i - 1));
      b.set_row(i - 1, tmp);
      g = gs_from_gram(gram(b));
      i = i > 1 ? i - 1 : 1;
    }
  }
  return b;
}

LatticeBasis lll_reduce(const LatticeBasis& l, const Rat& delta) {
  return make_lattice(lll_reduce_rows(l.basis, delta));
}

LatticeBasis lll_reduce(const LatticeBasis& l) { return lll_reduce(l, rat(99, 100)); }

namespace {

struct Enumerator {
  const IntMat* basis = nullptr;
  const GramSchmidt* gs = nullptr;
  std::size_t k = 0;
  Rat radius_sq;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  IntVec coeff;
  std::vector<IntVec>* out = nullptr;

  void descend(std::size_t level, const Rat& remaining) {
    // center for x_level given the fixed coefficients above it
    Rat c(0);
    for (std::size_t j = level + 1; j < k; ++j)
      c -= gs->mu[j][level] * Rat(coeff[j]);
    const Rat& q = gs->bstar_sq[level];
    Rat room = remaining / q;
    Int lo = ceil_c_minus_sqrt(c, room);
    Int hi = floor_c_plus_sqrt(c, room);
    for (Int x = lo; x <= hi; ++x) {
      if (++nodes > budget) fail(errc::budget_exceeded, "enumeration node budget");
      Rat d = Rat(x) - c;
      Rat rem2 = remaining - q * d * d;
      if (rem2 < 0) continue; // guards endpoint rounding
      coeff[level] = x;
      if (level == 0) {
        bool zero = true;
        for (std::size_t j = 0; j < k; ++j)
          if (coeff[j] != 0) {
            zero = false;
            break;
          }
        if (!zero) {
          IntVec v(basis->cols, Int(0));
          for (std::size_t j = 0; j < k; ++j)
            for (std::size_t cidx = 0; cidx < basis->cols; ++cidx)
              v[cidx] += coeff[j] * (*basis)(j, cidx);
          for (auto& e : v)
            if (e != 0) {
              if (e < 0)
                for (auto& f : v) f = -f;
              break;
            }
          out->push_back(std::move(v));
        }
      } else {
        descend(level - 1, rem2);
      }
    }
    coeff[level] = 0;
  }
};

} // namespace

std::vector<IntVec> vectors_up_to(const LatticeBasis& l, const Int& bound_sq,
                                  std::uint64_t budget) {
  if (bound_sq < 0) fail(errc::bad_parameter, "negative bound");
  IntMat red = lll_reduce_rows(l.basis, rat(99, 100));
  GramSchmidt gs = gs_from_gram(gram(red));
  std::vector<IntVec> out;
  Enumerator e;
  e.basis = &red;
  e.gs = &gs;
  e.k = red.rows;
  e.radius_sq = Rat(bound_sq);
  e.budget = budget;
  e.coeff.assign(red.rows, Int(0));
  e.out = &out;
  if (bound_sq > 0) e.descend(red.rows - 1, Rat(bound_sq));
  std::sort(out.begin(), out.end(), [](const IntVec& x, const IntVec& y) {
    Int nx = norm_sq(x), ny = norm_sq(y);
    if (nx != ny) return nx < ny;
    return lex_less(x, y);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MinimaProfile successive_minima(const LatticeBasis& l, std::uint64_t budget) {
  if (l.k > 8) fail(errc::unsupported_rank, "rank above enumeration scope");
  IntMat red = lll_reduce_rows(l.basis, rat(99, 100));
  IntMat g = gram(red);
  Int radius = g(0, 0);
  for (std::size_t i = 1; i < red.rows; ++i)
    if (g(i, i) > radius) radius = g(i, i);
  LatticeBasis lred = make_lattice(red);
  std::vector<IntVec> cand = vectors_up_to(lred, radius, budget);
  MinimaProfile p;
  std::vector<IntVec> picked;
  for (const auto& v : cand) {
    if (picked.size() == l.k) break;
    std::vector<IntVec> trial = picked;
    trial.push_back(v);
    if (rank(from_rows(trial)) == trial.size()) {
      picked.push_back(v);
      p.lambda_sq.push_back(norm_sq(v));
    }
  }
  if (picked.size() != l.k) fail(errc::internal, "minima search incomplete");
  p.witnesses = from_rows(picked);
  return p;
}

IntMat saturate_rows(const IntMat& rows) {
  std::size_t r = rank(rows);
  if (r == 0) fail(errc::rank_deficient, "zero lattice");
  if (r == rows.cols) return IntMat::identity(rows.cols);
  IntMat k1 = kernel_lattice(rows);
  return kernel_lattice(k1);
}

LatticeBasis saturate(const LatticeBasis& l) { return make_lattice(saturate_rows(l.basis)); }

RatVec coords_in_basis(const LatticeBasis& l, const RatVec& v) {
  if (v.size() != l.n) fail(errc::bad_input, "dimension mismatch");
  RatVec w(l.k, Rat(0));
  for (std::size_t j = 0; j < l.k; ++j)
    for (std::size_t i = 0; i < l.n; ++i) w[j] += v[i] * Rat(l.basis(j, i));
  auto inv = inverse_rational(l.gram);
  if (!inv) fail(errc::internal, "gram not invertible");
  RatVec y(l.k, Rat(0));
  for (std::size_t i = 0; i < l.k; ++i)
    for (std::size_t j = 0; j < l.k; ++j) y[i] += (*inv)[i][j] * w[j];
  for (std::size_t i = 0; i < l.n; ++i) {
    Rat s(0);
    for (std::size_t j = 0; j < l.k; ++j) s += y[j] * Rat(l.basis(j, i));
    if (s != v[i]) fail(errc::bad_input, "vector not in the lattice span");
  }
  return y;
}

} // namespace kf
