#pragma once

#include "g2v/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace g2v {

// Dense exact matrix over Q. Dimensions here are small (at most a few
// thousand columns for evaluation matrices), so plain Gaussian elimination
// with rational pivots is fine.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMat identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const QMat& x, const QMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  QMat operator-() const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }
  friend QMat operator+(const QMat& x, const QMat& y) {
    QMat r(x.rows_, x.cols_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend QMat operator-(const QMat& x, const QMat& y) {
    QMat r(x.rows_, x.cols_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend QMat operator*(const QMat& x, const QMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    QMat r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k).is_zero()) continue;
        for (size_t j = 0; j < y.cols_; ++j) {
          if (y(k, j).is_zero()) continue;
          r(i, j) += x(i, k) * y(k, j);
        }
      }
    return r;
  }
  friend QMat operator*(const Rat& s, const QMat& x) {
    QMat r(x.rows_, x.cols_);
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = s * x.a_[i];
    return r;
  }

  QMat transpose() const {
    QMat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  std::vector<Rat> apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
    std::vector<Rat> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  // Row echelon in place; returns rank. Used by rank() and nullspace().
  size_t reduce() {
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
      size_t piv = rank;
      while (piv < rows_ && (*this)(piv, col).is_zero()) ++piv;
      if (piv == rows_) continue;
      if (piv != rank)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(rank, j));
      Rat inv = (*this)(rank, col).inverse();
      for (size_t j = col; j < cols_; ++j) (*this)(rank, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == rank || (*this)(i, col).is_zero()) continue;
        Rat f = (*this)(i, col);
        for (size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(rank, j);
      }
      ++rank;
    }
    return rank;
  }

  size_t rank() const {
    QMat tmp = *this;
    return tmp.reduce();
  }

  // Basis of the right nullspace {v : Mv = 0}, one column vector per entry.
  std::vector<std::vector<Rat>> nullspace() const {
    QMat m = *this;
    m.reduce();
    // Locate pivot columns.
    std::vector<long> pivot_of_col(cols_, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      if (!m(r, c).is_zero()) {
        pivot_of_col[c] = static_cast<long>(r);
        ++r;
      }
    }
    std::vector<std::vector<Rat>> basis;
    for (size_t c = 0; c < cols_; ++c) {
      if (pivot_of_col[c] != -1) continue;
      std::vector<Rat> v(cols_);
      v[c] = Rat(1);
      for (size_t cc = 0; cc < c; ++cc)
        if (pivot_of_col[cc] != -1) v[cc] = -m(static_cast<size_t>(pivot_of_col[cc]), c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Rank of a family of row vectors.
inline size_t rank_of_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  QMat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m.rank();
}

}  // namespace g2v
