// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/channels.hpp"

#include <algorithm>
#include <cmath>

namespace qrev {

DensityMatrix::DensityMatrix(Mat mat, const Tolerance& tol) : m(std::move(mat)) {
  tol.validate();
  require_finite(m, "density matrix");
  if (m.rows() != m.cols() || m.rows() < 1)
    fail(ErrorCode::InvalidShape, "density matrix must be square");
  const double scale = std::max(1.0, max_abs(m));
  if (!is_hermitian(m, tol.eq_eps * scale))
    fail(ErrorCode::NotAState, "density matrix is not Hermitian");
  RealVec ev = hermitian_eigenvalues(m);
  if (ev(0) < -tol.eq_eps * std::max(1.0, ev(ev.size() - 1)))
    fail(ErrorCode::NotAState, "density matrix is not positive semidefinite");
  if (std::abs(m.trace().real() - 1.0) > 1e-8)
    fail(ErrorCode::NotAState, "density matrix trace is not 1");
}

DensityMatrix DensityMatrix::pure(const Vec& v) {
  const double n = v.norm();
  if (n < 1e-12)
    fail(ErrorCode::InvalidParameter, "pure state vector is zero");
  Vec u = v / n;
  DensityMatrix rho;
  rho.m = u * u.adjoint();
  return rho;
}

KrausChannel::KrausChannel(Eigen::Index din, Eigen::Index dout,
                           std::vector<Mat> ops, const Tolerance& tol,
                           double completeness_eps)
    : dim_in(din), dim_out(dout), kraus(std::move(ops)) {
  tol.validate();
  if (dim_in < 1 || dim_out < 1)
    fail(ErrorCode::InvalidShape, "channel dimensions must be positive");
  if (kraus.empty())
    fail(ErrorCode::NotAChannel, "channel needs at least one Kraus operator");
  for (const Mat& v : kraus) {
    require_finite(v, "Kraus operator");
    if (v.rows() != dim_out || v.cols() != dim_in)
      fail(ErrorCode::DimensionMismatch,
           "Kraus operator shape does not match channel dimensions");
  }
  const double res = completeness_residual();
  if (res > completeness_eps)
    fail(ErrorCode::NotAChannel,
         "Kraus operators are not trace preserving (residual " +
             std::to_string(res) + ")");
}

double KrausChannel::completeness_residual() const {
  Mat s = Mat::Zero(dim_in, dim_in);
  for (const Mat& v : kraus) s += v.adjoint() * v;
  return max_abs(s - Mat::Identity(dim_in, dim_in));
}

KrausChannel KrausChannel::identity(Eigen::Index d) {
  return KrausChannel(d, d, {Mat::Identity(d, d)});
}

KrausChannel KrausChannel::unitary(const Mat& u) {
  if (u.rows() != u.cols())
    fail(ErrorCode::InvalidShape, "unitary must be square");
  if (max_abs(u.adjoint() * u - Mat::Identity(u.cols(), u.cols())) > 1e-8)
    fail(ErrorCode::NotOrthonormal, "matrix is not unitary");
  return KrausChannel(u.rows(), u.rows(), {u});
}

KrausChannel KrausChannel::dephasing(Eigen::Index d) {
  return dephasing(Mat::Identity(d, d));
}

KrausChannel KrausChannel::dephasing(const Mat& basis) {
  const Eigen::Index d = basis.rows();
  if (basis.cols() != d)
    fail(ErrorCode::InvalidShape, "dephasing basis must be square");
  if (max_abs(basis.adjoint() * basis - Mat::Identity(d, d)) > 1e-8)
    fail(ErrorCode::NotOrthonormal, "dephasing basis is not orthonormal");
  std::vector<Mat> ops;
  ops.reserve(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec b = basis.col(i);
    ops.push_back(b * b.adjoint());
  }
  return KrausChannel(d, d, std::move(ops));
}

KrausChannel KrausChannel::depolarizing_to(const DensityMatrix& sigma,
                                           Eigen::Index dim_in) {
  Eigen::SelfAdjointEigenSolver<Mat> es(sigma.m);
  std::vector<Mat> ops;
  for (Eigen::Index k = 0; k < sigma.dim(); ++k) {
    const double lam = std::max(es.eigenvalues()(k), 0.0);
    if (lam == 0.0) continue;
    Vec u = es.eigenvectors().col(k);
    for (Eigen::Index c = 0; c < dim_in; ++c) {
      Mat v = Mat::Zero(sigma.dim(), dim_in);
      v.col(c) = std::sqrt(lam) * u;
      ops.push_back(std::move(v));
    }
  }
  return KrausChannel(dim_in, sigma.dim(), std::move(ops));
}

StateFamily::StateFamily(std::vector<DensityMatrix> s,
                         std::vector<std::string> l)
    : states(std::move(s)), labels(std::move(l)) {
  if (states.empty())
    fail(ErrorCode::InvalidParameter, "state family must be nonempty");
  const Eigen::Index d = states[0].dim();
  for (const DensityMatrix& rho : states)
    if (rho.dim() != d)
      fail(ErrorCode::DimensionMismatch,
           "state family members have mixed dimensions");
  if (labels.empty()) {
    labels.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
      labels.push_back(std::to_string(i));
  } else if (labels.size() != states.size()) {
    fail(ErrorCode::InvalidParameter, "label count does not match state count");
  }
}

DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho) {
  if (rho.dim() != phi.dim_in)
    fail(ErrorCode::DimensionMismatch, "state dimension does not match channel");
  DensityMatrix out;
  out.m = apply_raw(phi, rho.m);
  return out;
}

Mat apply_raw(const KrausChannel& phi, const Mat& x) {
  if (x.rows() != phi.dim_in || x.cols() != phi.dim_in)
    fail(ErrorCode::DimensionMismatch, "input dimension does not match channel");
  Mat y = Mat::Zero(phi.dim_out, phi.dim_out);
  for (const Mat& v : phi.kraus) y += v * x * v.adjoint();
  return y;
}

Mat dual_apply(const KrausChannel& phi, const Mat& x) {
  if (x.rows() != phi.dim_out || x.cols() != phi.dim_out)
    fail(ErrorCode::DimensionMismatch,
         "observable dimension does not match channel output");
  Mat y = Mat::Zero(phi.dim_in, phi.dim_in);
  for (const Mat& v : phi.kraus) y += v.adjoint() * x * v;
  return y;
}

Mat choi_matrix(const KrausChannel& phi) {
  const Eigen::Index din = phi.dim_in, dout = phi.dim_out;
  Mat j = Mat::Zero(din * dout, din * dout);
  for (const Mat& v : phi.kraus) {
    // vec(V) with composite index (i, a) = i*dout + a, V acting as a -> i.
    Vec w(din * dout);
    for (Eigen::Index i = 0; i < din; ++i)
      for (Eigen::Index a = 0; a < dout; ++a) w(i * dout + a) = v(a, i);
    j += w * w.adjoint();
  }
  return j;
}

KrausChannel canonicalize(const KrausChannel& phi, const Tolerance& tol) {
  tol.validate();
  const Eigen::Index din = phi.dim_in, dout = phi.dim_out;
  Mat j = choi_matrix(phi);
  Eigen::SelfAdjointEigenSolver<Mat> es(j);
  const auto& ev = es.eigenvalues();
  const double lmax = std::max(ev(ev.size() - 1), 0.0);
  const double cut = tol.rank_eps * std::max(lmax, 0.0);
  std::vector<Mat> ops;
  // Descending eigenvalue order keeps the dominant operator first.
  for (Eigen::Index k = ev.size() - 1; k >= 0; --k) {
    if (ev(k) <= cut) continue;
    const double s = std::sqrt(ev(k));
    Vec u = es.eigenvectors().col(k);
    Mat v(dout, din);
    for (Eigen::Index i = 0; i < din; ++i)
      for (Eigen::Index a = 0; a < dout; ++a) v(a, i) = s * u(i * dout + a);
    ops.push_back(std::move(v));
  }
  return KrausChannel(din, dout, std::move(ops), tol);
}

bool channels_equal(const KrausChannel& a, const KrausChannel& b, double eps) {
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out) return false;
  return approx_equal(choi_matrix(a), choi_matrix(b), eps);
}

KrausChannel complementary(const KrausChannel& phi, const Tolerance& tol) {
  KrausChannel c = canonicalize(phi, tol);
  const Eigen::Index r = static_cast<Eigen::Index>(c.kraus.size());
  std::vector<Mat> ops;
  ops.reserve(c.dim_out);
  for (Eigen::Index b = 0; b < c.dim_out; ++b) {
    Mat w(r, c.dim_in);
    for (Eigen::Index k = 0; k < r; ++k) w.row(k) = c.kraus[k].row(b);
    ops.push_back(std::move(w));
  }
  return KrausChannel(c.dim_in, r, std::move(ops), tol);
}

KrausChannel mixture(double p, const KrausChannel& a, const KrausChannel& b) {
  if (!(p > 0.0 && p < 1.0))
    fail(ErrorCode::InvalidProbability, "mixture weight must be in (0,1)");
  if (a.dim_in != b.dim_in || a.dim_out != b.dim_out)
    fail(ErrorCode::DimensionMismatch, "mixture components have mixed shapes");
  std::vector<Mat> ops;
  ops.reserve(a.kraus.size() + b.kraus.size());
  for (const Mat& v : a.kraus) ops.push_back(std::sqrt(p) * v);
  for (const Mat& v : b.kraus) ops.push_back(std::sqrt(1.0 - p) * v);
  return KrausChannel(a.dim_in, a.dim_out, std::move(ops));
}

KrausChannel weak_complementary(const std::vector<KrausChannel>& parts,
                                const std::vector<double>& weights,
                                const Tolerance& tol) {
  if (parts.empty() || parts.size() != weights.size())
    fail(ErrorCode::InvalidParameter,
         "weak_complementary needs matching channels and weights");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0))
      fail(ErrorCode::InvalidProbability, "weights must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    fail(ErrorCode::InvalidProbability, "weights must sum to 1");

  std::vector<KrausChannel> comps;
  comps.reserve(parts.size());
  Eigen::Index env = 0;
  for (const KrausChannel& part : parts) {
    if (part.dim_in != parts[0].dim_in || part.dim_out != parts[0].dim_out)
      fail(ErrorCode::DimensionMismatch,
           "weak_complementary parts have mixed shapes");
    comps.push_back(complementary(part, tol));
    env += comps.back().dim_out;
  }

  // Environments are stacked into orthogonal sectors, one per component.
  std::vector<Mat> ops;
  Eigen::Index off = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const Mat& w : comps[i].kraus) {
      Mat big = Mat::Zero(env, parts[0].dim_in);
      big.block(off, 0, w.rows(), w.cols()) = std::sqrt(weights[i]) * w;
      ops.push_back(std::move(big));
    }
    off += comps[i].dim_out;
  }
  return KrausChannel(parts[0].dim_in, env, std::move(ops), tol);
}

KrausChannel cq_channel(const Mat& basis,
                        const std::vector<DensityMatrix>& sigmas,
                        const Tolerance& tol) {
  const Eigen::Index d = basis.rows();
  if (basis.cols() != d)
    fail(ErrorCode::InvalidShape, "cq_channel basis must span the input space");
  if (max_abs(basis.adjoint() * basis - Mat::Identity(d, d)) > 1e-8)
    fail(ErrorCode::NotOrthonormal, "cq_channel basis is not orthonormal");
  if (static_cast<Eigen::Index>(sigmas.size()) != d)
    fail(ErrorCode::InvalidParameter,
         "cq_channel needs one output state per basis vector");
  const Eigen::Index dout = sigmas[0].dim();
  for (const DensityMatrix& s : sigmas)
    if (s.dim() != dout)
      fail(ErrorCode::DimensionMismatch,
           "cq_channel output states have mixed dimensions");

  std::vector<Mat> ops;
  for (Eigen::Index i = 0; i < d; ++i) {
    Eigen::SelfAdjointEigenSolver<Mat> es(sigmas[i].m);
    for (Eigen::Index k = 0; k < dout; ++k) {
      const double lam = std::max(es.eigenvalues()(k), 0.0);
      if (lam <= 0.0) continue;
      // sqrt(lam) |u_k><b_i|
      Mat v = std::sqrt(lam) * es.eigenvectors().col(k) *
              basis.col(i).adjoint();
      ops.push_back(std::move(v));
    }
  }
  return KrausChannel(d, dout, std::move(ops), tol);
}

KrausChannel compose(const KrausChannel& a, const KrausChannel& b) {
  if (b.dim_out != a.dim_in)
    fail(ErrorCode::DimensionMismatch, "compose: inner dimensions differ");
  std::vector<Mat> ops;
  ops.reserve(a.kraus.size() * b.kraus.size());
  for (const Mat& va : a.kraus)
    for (const Mat& vb : b.kraus) ops.push_back(va * vb);
  return KrausChannel(b.dim_in, a.dim_out, std::move(ops));
}

KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b) {
  std::vector<Mat> ops;
  ops.reserve(a.kraus.size() * b.kraus.size());
  for (const Mat& va : a.kraus)
    for (const Mat& vb : b.kraus) ops.push_back(kron(va, vb));
  return KrausChannel(a.dim_in * b.dim_in, a.dim_out * b.dim_out,
                      std::move(ops));
}

}  // namespace qrev
