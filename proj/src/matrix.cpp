#include "matrix.hpp"

#include <sstream>

namespace kf {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  a.reserve(rows * cols);
  for (const auto& r : init) {
    if (r.size() != cols) fail(errc::bad_input, "ragged matrix literal");
    for (long x : r) a.emplace_back(x);
  }
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

IntVec IntMat::col(std::size_t j) const {
  IntVec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMat::set_row(std::size_t i, const IntVec& v) {
  for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) fail(errc::internal, "mul: shape mismatch");
  IntMat z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

IntVec mul(const IntMat& x, const IntVec& v) {
  if (x.cols != v.size()) fail(errc::internal, "mul: shape mismatch");
  IntVec r(x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r[i] += x(i, j) * v[j];
  return r;
}

IntMat from_rows(const std::vector<IntVec>& rows) {
  IntMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) fail(errc::bad_input, "ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

Int dot(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) fail(errc::internal, "dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

IntVec add(const IntVec& x, const IntVec& y) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

IntVec sub(const IntVec& x, const IntVec& y) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

IntVec scale(const IntVec& x, const Int& c) {
  IntVec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * c;
  return r;
}

Int norm_sq(const IntVec& x) { return dot(x, x); }

Int one_norm(const IntVec& x) {
  Int s = 0;
  for (const Int& v : x) s += abs(v);
  return s;
}

bool is_zero(const IntVec& x) {
  for (const Int& v : x)
    if (v != 0) return false;
  return true;
}

bool lex_less(const IntVec& x, const IntVec& y) {
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return x.size() < y.size();
}

Int det_bareiss(const IntMat& m) {
  if (m.rows != m.cols) fail(errc::internal, "det of non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w(k, k);
  }
  return sign > 0 ? w(n - 1, n - 1) : Int(-w(n - 1, n - 1));
}

std::size_t rank(const IntMat& m) {
  // fraction-free row echelon, column pivoting
  IntMat w = m;
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    std::size_t p = r;
    while (p < w.rows && w(p, c) == 0) ++p;
    if (p == w.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < w.cols; ++j) swap(w(r, j), w(p, j));
    for (std::size_t i = r + 1; i < w.rows; ++i)
      for (std::size_t j = c + 1; j < w.cols; ++j) {
        Int t = w(i, j) * w(r, c) - w(i, c) * w(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w(i, j) = t;
      }
    for (std::size_t i = r + 1; i < w.rows; ++i) w(i, c) = 0;
    prev = w(r, c);
    ++r;
  }
  return r;
}

IntMat gram(const IntMat& m) {
  IntMat g(m.rows, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = i; j < m.rows; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < m.cols; ++k) s += m(i, k) * m(j, k);
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& b) {
  if (m.rows != m.cols || b.size() != m.rows) fail(errc::internal, "solve: shape mismatch");
  std::size_t n = m.rows;
  std::vector<RatVec> w(n, RatVec(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m(i, j));
    w[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) std::swap(w[p], w[k]);
    Rat inv = 1 / w[k][k];
    for (std::size_t j = k; j <= n; ++j) w[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      Rat f = w[i][k];
      for (std::size_t j = k; j <= n; ++j) w[i][j] -= f * w[k][j];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = w[i][n];
  return x;
}

std::optional<std::vector<RatVec>> inverse_rational(const IntMat& m) {
  if (m.rows != m.cols) fail(errc::internal, "inverse of non-square matrix");
  std::size_t n = m.rows;
  std::vector<RatVec> w(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m(i, j));
    w[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) std::swap(w[p], w[k]);
    Rat inv = 1 / w[k][k];
    for (std::size_t j = 0; j < 2 * n; ++j) w[k][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      Rat f = w[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[k][j];
    }
  }
  std::vector<RatVec> inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
  return inv;
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < m.cols; ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

} // namespace kf
