#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "bigint.hpp"

namespace kf {

// Dense integer matrix, row-major.
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  IntMat(std::initializer_list<std::initializer_list<long>> init);

  Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  void set_row(std::size_t i, const IntVec& v);

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  static IntMat identity(std::size_t n);
};

IntMat transpose(const IntMat& m);
IntMat mul(const IntMat& x, const IntMat& y);
IntVec mul(const IntMat& x, const IntVec& v);
IntMat from_rows(const std::vector<IntVec>& rows);

Int dot(const IntVec& x, const IntVec& y);
IntVec add(const IntVec& x, const IntVec& y);
IntVec sub(const IntVec& x, const IntVec& y);
IntVec scale(const IntVec& x, const Int& c);
Int norm_sq(const IntVec& x);
Int one_norm(const IntVec& x);
bool is_zero(const IntVec& x);

// lexicographic order on vectors
bool lex_less(const IntVec& x, const IntVec& y);

// Fraction-free determinant (Bareiss). Square input.
Int det_bareiss(const IntMat& m);

// Rank over Q.
std::size_t rank(const IntMat& m);

// Gram matrix m * m^T.
IntMat gram(const IntMat& m);

// Solve square rational system M x = b by Gaussian elimination.
// Returns nullopt when M is singular.
std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& b);

// Inverse of a square rational matrix given as integer matrix; nullopt if singular.
std::optional<std::vector<RatVec>> inverse_rational(const IntMat& m);

std::string to_string(const IntMat& m);

} // namespace kf
