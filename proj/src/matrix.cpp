#include "qform/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace qform {

IMat IMat::identity(std::size_t n) {
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat IMat::transposed() const {
  IMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IMat operator*(const IMat& x, const IMat& y) {
  assert(x.cols_ == y.rows_);
  IMat r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Int& v = x(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

namespace {

// Fraction-free Bareiss elimination in place. Returns the number of pivots
// and, for square full-rank input, leaves the determinant at (n-1, n-1)
// (sign tracked through row swaps via the returned sign).
std::size_t bareiss(IMat& m, int& sign) {
  sign = 1;
  const std::size_t rows = m.rows(), cols = m.cols();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace

Int det_bareiss(const IMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  IMat w = m;
  int sign = 1;
  std::size_t r = bareiss(w, sign);
  if (r < m.rows()) return 0;
  return sign * w(m.rows() - 1, m.cols() - 1);
}

std::size_t rank(const IMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IMat w = m;
  int sign = 1;
  return bareiss(w, sign);
}

namespace {

// Rational LDL pivots of a symmetric matrix: pivot_k = det(A_k)/det(A_{k-1}).
// Positive definite iff every pivot is positive; any zero or negative pivot
// terminates the scan.
bool all_pivots_positive(const IMat& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

}  // namespace

bool is_positive_definite(const IMat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("definiteness test on non-symmetric matrix");
  return all_pivots_positive(m);
}

bool is_negative_definite(const IMat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("definiteness test on non-symmetric matrix");
  IMat neg(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) neg(i, j) = -m(i, j);
  return all_pivots_positive(neg);
}

std::vector<Int> smith_normal_form(IMat m) {
  using std::size_t;
  const size_t rows = m.rows(), cols = m.cols();
  const size_t n = std::min(rows, cols);
  std::vector<Int> diag(n, 0);
  size_t t = 0;
  while (t < n) {
    // pick the entry of least absolute value in the remaining block
    size_t pi = t, pj = t;
    Int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        Int v = boost::multiprecision::abs(m(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;  // remaining block is zero
    for (size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(t, j));
    for (size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, t));

    bool clean = true;
    for (size_t i = t + 1; i < rows && clean; ++i) {
      Int q = m(i, t) / m(t, t);
      if (q != 0)
        for (size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
      if (m(i, t) != 0) clean = false;  // remainder left, re-pick pivot
    }
    if (clean)
      for (size_t j = t + 1; j < cols && clean; ++j) {
        Int q = m(t, j) / m(t, t);
        if (q != 0)
          for (size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
    if (!clean) continue;

    // pivot must divide the rest of the block
    bool divides = true;
    for (size_t i = t + 1; i < rows && divides; ++i)
      for (size_t j = t + 1; j < cols && divides; ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (size_t jj = 0; jj < cols; ++jj) m(t, jj) += m(i, jj);
          divides = false;
        }
    if (!divides) continue;

    diag[t] = boost::multiprecision::abs(m(t, t));
    ++t;
  }
  return diag;
}

std::vector<Rat> solve_linear(const IMat& m, const std::vector<Int>& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw std::invalid_argument("solve_linear shape mismatch");
  IMat w(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n) = b[i];
  }
  int sign = 1;
  bareiss(w, sign);
  // singular m leaves a zero on the diagonal (a pivot may still sit in the
  // augmented column, so the pivot count alone is not conclusive)
  for (std::size_t k = 0; k < n; ++k)
    if (w(k, k) == 0) return {};
  std::vector<Rat> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rat acc(w(k, n));
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rat(w(k, j)) * x[j];
    x[k] = acc / Rat(w(k, k));
  }
  return x;
}

}  // namespace qform
