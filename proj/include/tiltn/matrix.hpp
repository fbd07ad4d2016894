#ifndef TILTN_MATRIX_HPP
#define TILTN_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace tiltn {

/// Dense matrix over the rationals. Column-vector convention: an r x c
/// matrix represents a linear map from a c-dimensional space to an
/// r-dimensional one.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat &operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const Rat &operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool operator==(const Mat &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  bool is_zero() const {
    for (const auto &x : data_)
      if (x != 0) return false;
    return true;
  }

  Mat operator*(const Mat &o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat &a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rat &b = o(k, j);
          if (b != 0) r(i, j) += a * b;
        }
      }
    return r;
  }

  Mat operator+(const Mat &o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }

  Mat operator-(const Mat &o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }

  Mat scaled(const Rat &c) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Mat apply(const Mat &v) const { return (*this) * v; }

  /// Column j as an r x 1 matrix.
  Mat col(std::size_t j) const {
    Mat r(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
    return r;
  }

  /// Horizontal concatenation [A | B].
  static Mat hcat(const Mat &a, const Mat &b) {
    if (a.cols_ == 0 && a.rows_ == 0) return b;
    if (b.cols_ == 0 && b.rows_ == 0) return a;
    assert(a.rows_ == b.rows_);
    Mat r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  /// Vertical concatenation [A; B].
  static Mat vcat(const Mat &a, const Mat &b) {
    if (a.cols_ == 0 && a.rows_ == 0) return b;
    if (b.cols_ == 0 && b.rows_ == 0) return a;
    assert(a.cols_ == b.cols_);
    Mat r(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
    return r;
  }

  /// Row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t p = row;
      while (p < rows_ && (*this)(p, col) == 0) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap(data_[p * cols_ + j], data_[row * cols_ + j]);
      Rat inv = 1 / (*this)(row, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        const Rat c = (*this)(i, col);
        if (c == 0) continue;
        for (std::size_t j = col; j < cols_; ++j)
          (*this)(i, j) -= c * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Mat m = *this;
    return m.rref().size();
  }

  /// Basis of the null space, as columns of the returned matrix.
  Mat kernel() const {
    Mat m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t nfree = cols_ - pivots.size();
    Mat k(cols_, nfree);
    std::size_t kc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_pivot[j]) continue;
      k(j, kc) = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], kc) = -m(r, j);
      ++kc;
    }
    return k;
  }

  /// Solve A x = b; returns false if inconsistent.
  bool solve(const Mat &b, Mat &x) const {
    assert(b.rows() == rows_);
    Mat aug = hcat(*this, b);
    auto pivots = aug.rref();
    for (auto p : pivots)
      if (p >= cols_) return false;
    x = Mat(cols_, b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, cols_ + j);
    return true;
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  /// Row space basis (rows of the returned matrix); canonical via rref.
  Mat row_basis() const {
    Mat m = *this;
    auto pivots = m.rref();
    Mat r(pivots.size(), cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = m(i, j);
    return r;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// Column span helper: keeps a canonical rref basis of a growing subspace
/// of Q^dim. Vectors are stored as rows internally.
class Subspace {
public:
  explicit Subspace(std::size_t dim) : dim_(dim), basis_(0, dim) {}

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return dim_; }

  bool contains(const Mat &v) const {
    assert(v.rows() == dim_ && v.cols() == 1);
    Mat m = Mat::vcat(basis_, v.transpose());
    return m.rank() == basis_.rows();
  }

  /// Inserts v; returns true if the subspace grew.
  bool insert(const Mat &v) {
    assert(v.rows() == dim_ && v.cols() == 1);
    Mat m = Mat::vcat(basis_, v.transpose());
    Mat rb = m.row_basis();
    if (rb.rows() == basis_.rows()) return false;
    basis_ = rb;
    return true;
  }

  /// Basis vectors as columns of a dim x k matrix.
  Mat basis_cols() const { return basis_.transpose(); }

  const Mat &basis_rows() const { return basis_; }

  bool operator==(const Subspace &o) const {
    return dim_ == o.dim_ && basis_ == o.basis_;
  }

private:
  std::size_t dim_;
  Mat basis_;
};

} // namespace tiltn

#endif
