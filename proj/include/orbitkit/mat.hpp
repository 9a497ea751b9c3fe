#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/order.hpp"
#include "orbitkit/rat.hpp"
#include "orbitkit/ratfunc.hpp"

namespace orbitkit {

// Dense matrix over an exact field K (Rat or RatFunc).  All elimination is
// exact; pivoting picks the first nonzero entry in column order, so results
// are deterministic.
template <class K>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, K(0)) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
      throw DimensionMismatch("matrix entry count does not match shape");
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Mat diag(const std::vector<K>& d) {
    Mat m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  K& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionMismatch("matrix index out of range");
    return e_[i * cols_ + j];
  }

  std::vector<K> col(std::size_t j) const {
    std::vector<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(e_.begin() + static_cast<long>(i * cols_),
                          e_.begin() + static_cast<long>((i + 1) * cols_));
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    a.require_same_shape(b);
    Mat r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    a.require_same_shape(b);
    Mat r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product shape mismatch");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Mat operator*(const K& s, const Mat& m) {
    Mat r = m;
    for (auto& e : r.e_) e = s * e;
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<K> r(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::size_t rank() const {
    Mat m = *this;
    return m.forward_eliminate();
  }

  K det() const {
    require_square();
    Mat m = *this;
    K scale(1);
    bool negate = false;
    for (std::size_t c = 0, r = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return K(0);
      if (p != r) { m.swap_rows(p, r); negate = !negate; }
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        K f = m(i, c) / m(r, c);
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      ++r;
    }
    for (std::size_t i = 0; i < rows_; ++i) scale *= m(i, i);
    return negate ? -scale : scale;
  }

  struct AdjugateResult {
    K det;
    Mat adjugate;             // adj(M) * M = det(M) * I, always defined
    std::optional<Mat> inverse;  // present iff det != 0
  };

  AdjugateResult adjugate_inverse() const {
    require_square();
    K d = det();
    if (!d.is_zero()) {
      Mat inv = inverse_nonsingular();
      return {d, d * inv, inv};
    }
    // Singular case: cofactor expansion (n is small throughout this library).
    Mat adj(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        K m = minor_det(j, i);
        adj(i, j) = ((i + j) % 2 == 0) ? m : -m;
      }
    return {d, adj, std::nullopt};
  }

  Mat inverse() const {
    require_square();
    return inverse_nonsingular();
  }

  // Basis of the right kernel {x : M x = 0}, returned as the columns of an
  // n x k matrix (k = nullity); deterministic (free columns in index order).
  Mat kernel_basis() const {
    Mat m = *this;
    std::vector<std::size_t> pivot_col;
    m.rref(pivot_col);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Mat ker(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      std::size_t fc = free_cols[k];
      ker(fc, k) = K(1);
      for (std::size_t r = 0; r < pivot_col.size(); ++r)
        ker(pivot_col[r], k) = -m(r, fc);
    }
    return ker;
  }

private:
  void require_square() const {
    if (!is_square()) throw DimensionMismatch("operation requires a square matrix");
  }
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix shape mismatch");
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  // Row echelon; returns rank.
  std::size_t forward_eliminate() {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r) swap_rows(p, r);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if ((*this)(i, c).is_zero()) continue;
        K f = (*this)(i, c) / (*this)(r, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      ++r;
    }
    return r;
  }

  // Reduced row echelon in place; records pivot columns.
  void rref(std::vector<std::size_t>& pivot_col) {
    pivot_col.clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r) swap_rows(p, r);
      K inv = K(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = inv * (*this)(r, j);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        K f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivot_col.push_back(c);
      ++r;
    }
  }

  Mat inverse_nonsingular() const {
    std::size_t n = rows_;
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = K(1);
    }
    std::vector<std::size_t> pivots;
    aug.rref(pivots);
    if (pivots.size() != n || pivots.back() >= n)
      throw Singular("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  // Determinant of the submatrix with row i and column j removed.
  K minor_det(std::size_t i, std::size_t j) const {
    Mat sub(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, sr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, sc = 0; c < cols_; ++c) {
        if (c == j) continue;
        sub(sr, sc) = (*this)(r, c);
        ++sc;
      }
      ++sr;
    }
    return sub.rows() == 0 ? K(1) : sub.det();
  }

  std::size_t rows_, cols_;
  std::vector<K> e_;
};

using MatQ = Mat<Rat>;
using MatQt = Mat<RatFunc>;

// Minimum order over all entries; infinite for the zero matrix.
Order mat_order(const MatQt& m);
// Entrywise value at t = 0; every entry must have nonnegative order.
MatQ mat_at_zero(const MatQt& m);
// Entrywise evaluation at a rational point.
MatQ mat_eval(const MatQt& m, const Rat& x);
MatQt lift(const MatQ& m);

}  // namespace orbitkit
