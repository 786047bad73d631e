#pragma once

#include <cstddef>
#include <vector>

#include "qform/numbers.hpp"

namespace qform {

/// Dense matrix of arbitrary-precision integers.
class IMat {
 public:
  IMat() : rows_(0), cols_(0) {}
  IMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IMat transposed() const;
  bool is_symmetric() const;

  friend IMat operator*(const IMat& x, const IMat& y);
  friend bool operator==(const IMat& x, const IMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Determinant by fraction-free Bareiss elimination.
Int det_bareiss(const IMat& m);

/// Rank over Q (equivalently over Z), fraction-free elimination.
std::size_t rank(const IMat& m);

/// Exact test via rational LDL pivots; requires a symmetric matrix.
bool is_positive_definite(const IMat& m);
bool is_negative_definite(const IMat& m);

/// Smith normal form diagonal: nonnegative, each entry dividing the next,
/// padded with zeros up to min(rows, cols).
std::vector<Int> smith_normal_form(IMat m);

/// Solves m * x = b exactly over the rationals; empty result if m is singular.
/// m must be square with b.size() == m.rows().
std::vector<Rat> solve_linear(const IMat& m, const std::vector<Int>& b);

}  // namespace qform
