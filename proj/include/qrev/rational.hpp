// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include <Eigen/Dense>

#include "qrev/error.hpp"

namespace qrev {

using Rational = mpq_class;

Rational rat(long num, long den = 1);
// Accepts "p", "p/q", optional sign, base 10.
Rational rat_from_string(const std::string& s);
// Exact binary expansion of the double, no rounding.
Rational rat_from_double_exact(double x);
std::string rat_to_string(const Rational& x);

// Dense matrix over Q. Sized for the small symplectic problems this
// project works with; all operations are exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int rows, int cols);
  static RationalMatrix hstack(const RationalMatrix& a,
                               const RationalMatrix& b);
  static RationalMatrix vstack(const RationalMatrix& a,
                               const RationalMatrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[idx(i, j)]; }
  const Rational& operator()(int i, int j) const { return data_[idx(i, j)]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator-() const;
  RationalMatrix scaled(const Rational& c) const;

  bool operator==(const RationalMatrix& o) const;
  bool is_zero() const;

  RationalMatrix block(int i, int j, int r, int c) const;
  RationalMatrix col(int j) const;

  // Reduced row echelon form; returns pivot column indices.
  std::vector<int> rref_in_place();
  int rank() const;
  // Columns span the kernel; empty (n x 0) when injective.
  RationalMatrix kernel_basis() const;
  // The pivot columns of the original matrix.
  RationalMatrix column_space_basis() const;
  Rational determinant() const;
  RationalMatrix inverse() const;

  Eigen::MatrixXd to_double() const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace qrev
