// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qrev {

double max_abs(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool approx_equal(const Mat& a, const Mat& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= eps;
}

bool is_hermitian(const Mat& a, double eps) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.adjoint()) <= eps;
}

void require_finite(const Mat& a, const char* what) {
  if (!a.allFinite())
    fail(ErrorCode::InvalidParameter,
         std::string(what) + " contains a non-finite entry");
}

double hs_norm(const Mat& a) { return a.norm(); }

Complex hs_inner(const Mat& a, const Mat& b) {
  return (a.adjoint() * b).trace();
}

double trace_norm(const Mat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues().sum();
}

double trace_distance(const Mat& a, const Mat& b) {
  return 0.5 * trace_norm(a - b);
}

RealVec hermitian_eigenvalues(const Mat& a) {
  Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Eigen::Index numerical_rank(const Mat& a, double rank_eps) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cut = rank_eps * sv(0);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

namespace {

// Eigendecomposition of a Hermitian-within-eps matrix, with the PSD check
// shared by support_projector and psd_sqrt_and_pinv_sqrt.
Eigen::SelfAdjointEigenSolver<Mat> psd_eigensolver(const Mat& rho,
                                                   const Tolerance& tol,
                                                   const char* what) {
  tol.validate();
  require_finite(rho, what);
  if (rho.rows() != rho.cols())
    fail(ErrorCode::InvalidShape, std::string(what) + " must be square");
  const double scale = std::max(1.0, max_abs(rho));
  if (!is_hermitian(rho, tol.eq_eps * scale))
    fail(ErrorCode::NotHermitian, std::string(what) + " is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()));
  const auto& ev = es.eigenvalues();
  const double lmax = std::max(ev(ev.size() - 1), 0.0);
  if (ev(0) < -tol.eq_eps * std::max(lmax, 1.0))
    fail(ErrorCode::NotPSD, std::string(what) + " has a negative eigenvalue");
  return es;
}

}  // namespace

Mat support_projector(const Mat& rho, const Tolerance& tol) {
  auto es = psd_eigensolver(rho, tol, "support_projector input");
  const auto& ev = es.eigenvalues();
  const double lmax = std::max(ev(ev.size() - 1), 0.0);
  const double cut = tol.rank_eps * lmax;
  Mat p = Mat::Zero(rho.rows(), rho.cols());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > cut) {
      Vec v = es.eigenvectors().col(i);
      p += v * v.adjoint();
    }
  }
  return p;
}

std::pair<Mat, Mat> psd_sqrt_and_pinv_sqrt(const Mat& rho,
                                           const Tolerance& tol) {
  auto es = psd_eigensolver(rho, tol, "psd_sqrt input");
  const auto& ev = es.eigenvalues();
  const double lmax = std::max(ev(ev.size() - 1), 0.0);
  const double cut = tol.rank_eps * lmax;
  RealVec s = RealVec::Zero(ev.size());
  RealVec si = RealVec::Zero(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > cut) {
      s(i) = std::sqrt(ev(i));
      si(i) = 1.0 / s(i);
    } else if (ev(i) > 0.0) {
      s(i) = std::sqrt(ev(i));
    }
  }
  const Mat& u = es.eigenvectors();
  return {u * s.asDiagonal() * u.adjoint(), u * si.asDiagonal() * u.adjoint()};
}

Mat partial_trace(const Mat& x, Eigen::Index d1, Eigen::Index d2, int which) {
  if (d1 < 1 || d2 < 1 || x.rows() != d1 * d2 || x.cols() != d1 * d2)
    fail(ErrorCode::DimensionMismatch,
         "partial_trace: matrix is not (d1*d2)x(d1*d2)");
  if (which != 1 && which != 2)
    fail(ErrorCode::InvalidParameter, "partial_trace: which must be 1 or 2");
  if (which == 2) {
    Mat y = Mat::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k)
          y(i, j) += x(i * d2 + k, j * d2 + k);
    return y;
  }
  Mat y = Mat::Zero(d2, d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k)
        y(i, j) += x(k * d2 + i, k * d2 + j);
  return y;
}

std::optional<Mat> common_eigenbasis(const std::vector<Mat>& family,
                                     const Tolerance& tol,
                                     std::uint64_t seed) {
  tol.validate();
  if (family.empty())
    fail(ErrorCode::InvalidParameter, "common_eigenbasis: empty family");
  const Eigen::Index d = family[0].rows();
  for (const Mat& a : family) {
    require_finite(a, "common_eigenbasis input");
    if (a.rows() != d || a.cols() != d)
      fail(ErrorCode::DimensionMismatch,
           "common_eigenbasis: family members must be square and same size");
  }

  // Normal and pairwise commuting, else no common eigenbasis exists.
  for (const Mat& a : family) {
    const double s = std::max(1.0, hs_norm(a) * hs_norm(a));
    if (hs_norm(a * a.adjoint() - a.adjoint() * a) > tol.eq_eps * s)
      return std::nullopt;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const double s =
          std::max(1.0, hs_norm(family[i]) * hs_norm(family[j]));
      if (hs_norm(family[i] * family[j] - family[j] * family[i]) >
          tol.eq_eps * s)
        return std::nullopt;
    }
  }

  for (int attempt = 0; attempt < 3; ++attempt) {
    auto rng = seeded_rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    Mat h = Mat::Zero(d, d);
    for (const Mat& a : family) {
      const Mat re = 0.5 * (a + a.adjoint());
      const Mat im = (a - a.adjoint()) * Complex(0.0, -0.5);
      h += coeff(rng) * re + coeff(rng) * im;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const Mat u = es.eigenvectors();

    bool ok = true;
    for (const Mat& a : family) {
      const Mat b = u.adjoint() * a * u;
      const Mat off = b - Mat(b.diagonal().asDiagonal());
      if (max_abs(off) > tol.eq_eps * std::max(1.0, hs_norm(a))) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  return std::nullopt;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::mt19937_64 seeded_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Mat random_complex_matrix(Eigen::Index rows, Eigen::Index cols,
                          std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

Mat random_unitary(Eigen::Index d, std::mt19937_64& rng) {
  Mat g = random_complex_matrix(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ() * Mat::Identity(d, d);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < d; ++i) {
    Complex rii = r(i, i);
    double a = std::abs(rii);
    if (a > 0.0) q.col(i) *= rii / a;
  }
  return q;
}

Vec random_unit_vector(Eigen::Index d, std::mt19937_64& rng) {
  Vec v = random_complex_matrix(d, 1, rng);
  double n = v.norm();
  while (n < 1e-12) {
    v = random_complex_matrix(d, 1, rng);
    n = v.norm();
  }
  return v / n;
}

Mat random_density(Eigen::Index d, std::mt19937_64& rng, Eigen::Index rank) {
  if (rank <= 0 || rank > d) rank = d;
  Mat a = random_complex_matrix(d, rank, rng);
  Mat rho = a * a.adjoint();
  return rho / rho.trace().real();
}

}  // namespace qrev
