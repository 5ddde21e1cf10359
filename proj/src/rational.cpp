// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/rational.hpp"

#include <cmath>

namespace qrev {

Rational rat(long num, long den) {
  if (den == 0) fail(ErrorCode::InvalidParameter, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_from_string(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos)
    fail(ErrorCode::ParseError, "empty rational literal");
  const std::string t = s.substr(a, b - a + 1);
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, t.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    fail(ErrorCode::ParseError, "bad rational literal \"" + t + "\"");
  }
  mpq_canonicalize(q);
  Rational r(q);
  mpq_clear(q);
  return r;
}

Rational rat_from_double_exact(double x) {
  if (!std::isfinite(x))
    fail(ErrorCode::InvalidParameter, "cannot convert non-finite value");
  return Rational(x);
}

std::string rat_to_string(const Rational& x) { return x.get_str(); }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0)
    fail(ErrorCode::InvalidShape, "negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::zero(int rows, int cols) {
  return RationalMatrix(rows, cols);
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& a,
                                      const RationalMatrix& b) {
  if (a.rows_ != b.rows_)
    fail(ErrorCode::DimensionMismatch, "hstack: row counts differ");
  RationalMatrix m(a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (int j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
  }
  return m;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& a,
                                      const RationalMatrix& b) {
  if (a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "vstack: column counts differ");
  RationalMatrix m(a.rows_ + b.rows_, a.cols_);
  for (int j = 0; j < a.cols_; ++j) {
    for (int i = 0; i < a.rows_; ++i) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i) m(a.rows_ + i, j) = b(i, j);
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_)
    fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  RationalMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + o.data_[k];
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  RationalMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - o.data_[k];
  return m;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
  return m;
}

RationalMatrix RationalMatrix::scaled(const Rational& c) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = c * data_[k];
  return m;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::block(int i, int j, int r, int c) const {
  if (i < 0 || j < 0 || r < 0 || c < 0 || i + r > rows_ || j + c > cols_)
    fail(ErrorCode::InvalidShape, "block out of range");
  RationalMatrix m(r, c);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < c; ++b) m(a, b) = (*this)(i + a, j + b);
  return m;
}

RationalMatrix RationalMatrix::col(int j) const { return block(0, j, rows_, 1); }

std::vector<int> RationalMatrix::rref_in_place() {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols_ && row < rows_; ++c) {
    int p = -1;
    for (int r = row; r < rows_; ++r) {
      if ((*this)(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j)
        std::swap((*this)(p, j), (*this)(row, j));
    const Rational inv = 1 / (*this)(row, c);
    for (int j = 0; j < cols_; ++j) (*this)(row, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Rational f = (*this)(r, c);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j) (*this)(r, j) -= f * (*this)(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

int RationalMatrix::rank() const {
  RationalMatrix m = *this;
  return static_cast<int>(m.rref_in_place().size());
}

RationalMatrix RationalMatrix::kernel_basis() const {
  RationalMatrix m = *this;
  std::vector<int> pivots = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RationalMatrix k(cols_, static_cast<int>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const int fc = free_cols[f];
    k(fc, static_cast<int>(f)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      k(pivots[r], static_cast<int>(f)) = -m(static_cast<int>(r), fc);
  }
  return k;
}

RationalMatrix RationalMatrix::column_space_basis() const {
  RationalMatrix m = *this;
  std::vector<int> pivots = m.rref_in_place();
  RationalMatrix b(rows_, static_cast<int>(pivots.size()));
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < rows_; ++i) b(i, static_cast<int>(j)) = (*this)(i, pivots[j]);
  return b;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_)
    fail(ErrorCode::InvalidShape, "determinant of non-square matrix");
  RationalMatrix m = *this;
  Rational det(1);
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int r = c; r < rows_; ++r) {
      if (m(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) return Rational(0);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = 1 / m(c, c);
    for (int r = c + 1; r < rows_; ++r) {
      const Rational f = m(r, c) * inv;
      if (f == 0) continue;
      for (int j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_)
    fail(ErrorCode::InvalidShape, "inverse of non-square matrix");
  RationalMatrix aug = hstack(*this, identity(rows_));
  std::vector<int> pivots = aug.rref_in_place();
  // Invertible iff every pivot lands in the left block, one per column.
  for (int i = 0; i < rows_; ++i)
    if (i >= static_cast<int>(pivots.size()) || pivots[i] != i)
      fail(ErrorCode::InvalidParameter, "matrix is singular");
  return aug.block(0, cols_, rows_, cols_);
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).get_d();
  return m;
}

}  // namespace qrev
