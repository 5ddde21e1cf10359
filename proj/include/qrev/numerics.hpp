// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qrev/error.hpp"

namespace qrev {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;

// Shared tolerance policy. rank_eps gates rank and support decisions
// (relative to the largest eigenvalue or singular value); eq_eps gates
// equality and invariant checks.
struct Tolerance {
  double rank_eps = 1e-9;
  double eq_eps = 1e-10;

  void validate() const {
    if (!(rank_eps > 0.0) || !(eq_eps > 0.0))
      fail(ErrorCode::InvalidTolerance, "tolerances must be positive");
  }
};

double max_abs(const Mat& a);
bool approx_equal(const Mat& a, const Mat& b, double eps);
bool is_hermitian(const Mat& a, double eps);
void require_finite(const Mat& a, const char* what);

double hs_norm(const Mat& a);
Complex hs_inner(const Mat& a, const Mat& b);

// Sum of singular values.
double trace_norm(const Mat& a);
// (1/2)‖a-b‖₁.
double trace_distance(const Mat& a, const Mat& b);

// Eigenvalues of (a+a†)/2, ascending.
RealVec hermitian_eigenvalues(const Mat& a);

Eigen::Index numerical_rank(const Mat& a, double rank_eps);

// Orthogonal projector onto the span of eigenvectors of rho with
// eigenvalue > rank_eps * lambda_max.
Mat support_projector(const Mat& rho, const Tolerance& tol = {});

// (rho^{1/2}, rho^{-1/2}) with the inverse taken on the support only.
std::pair<Mat, Mat> psd_sqrt_and_pinv_sqrt(const Mat& rho,
                                           const Tolerance& tol = {});

// Traces out tensor factor `which` (1 or 2) of a (d1*d2)x(d1*d2) matrix,
// first factor varying slowest.
Mat partial_trace(const Mat& x, Eigen::Index d1, Eigen::Index d2, int which);

// Unitary U with U†AU diagonal for every A in the family, or nullopt if
// the family is not commuting (or not normal). Found by diagonalizing a
// random Hermitian combination and verifying; retries up to 3 seeds.
std::optional<Mat> common_eigenbasis(const std::vector<Mat>& family,
                                     const Tolerance& tol = {},
                                     std::uint64_t seed = 0);

Mat kron(const Mat& a, const Mat& b);

std::mt19937_64 seeded_rng(std::uint64_t seed);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

Mat random_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                          std::mt19937_64& rng);
Mat random_unitary(Eigen::Index d, std::mt19937_64& rng);
Vec random_unit_vector(Eigen::Index d, std::mt19937_64& rng);
Mat random_density(Eigen::Index d, std::mt19937_64& rng, Eigen::Index rank = 0);

}  // namespace qrev
