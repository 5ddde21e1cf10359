// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/entropy.hpp"

#include <cmath>
#include <limits>

namespace qrev {

Ensemble::Ensemble(std::vector<double> w, std::vector<DensityMatrix> s)
    : weights(std::move(w)), states(std::move(s)) {
  if (states.empty() || weights.size() != states.size())
    fail(ErrorCode::InvalidParameter,
         "ensemble needs matching weights and states");
  double sum = 0.0;
  for (double x : weights) {
    if (!(x > 0.0))
      fail(ErrorCode::InvalidProbability, "ensemble weights must be positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    fail(ErrorCode::InvalidProbability, "ensemble weights must sum to 1");
  for (double& x : weights) x /= sum;
  const Eigen::Index d = states[0].dim();
  for (const DensityMatrix& rho : states)
    if (rho.dim() != d)
      fail(ErrorCode::DimensionMismatch,
           "ensemble states have mixed dimensions");
}

DensityMatrix Ensemble::average() const {
  Mat avg = Mat::Zero(dim(), dim());
  for (std::size_t i = 0; i < size(); ++i) avg += weights[i] * states[i].m;
  return DensityMatrix(avg);
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerance& tol) {
  tol.validate();
  RealVec ev = hermitian_eigenvalues(rho.m);
  double h = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) h -= ev(i) * std::log(ev(i));
  return std::max(h, 0.0);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        const Tolerance& tol) {
  tol.validate();
  if (rho.dim() != sigma.dim())
    fail(ErrorCode::DimensionMismatch,
         "relative entropy needs states of equal dimension");

  Eigen::SelfAdjointEigenSolver<Mat> es_s(sigma.m);
  const RealVec& mu = es_s.eigenvalues();
  const double mu_cut = tol.rank_eps * std::max(mu(mu.size() - 1), 0.0);

  double outside = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (mu(k) <= mu_cut) {
      Vec v = es_s.eigenvectors().col(k);
      outside += (v.adjoint() * rho.m * v).real()(0, 0);
    }
  }
  if (outside > tol.rank_eps)
    return std::numeric_limits<double>::infinity();

  Eigen::SelfAdjointEigenSolver<Mat> es_r(rho.m);
  const RealVec& lam = es_r.eigenvalues();
  double tr_rho_log_rho = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam(i) > 0.0) tr_rho_log_rho += lam(i) * std::log(lam(i));

  double tr_rho_log_sigma = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k) {
    if (mu(k) > mu_cut) {
      Vec v = es_s.eigenvectors().col(k);
      const double p = (v.adjoint() * rho.m * v).real()(0, 0);
      tr_rho_log_sigma += p * std::log(mu(k));
    }
  }
  return std::max(tr_rho_log_rho - tr_rho_log_sigma, 0.0);
}

double holevo(const Ensemble& e, const Tolerance& tol) {
  tol.validate();
  DensityMatrix avg = e.average();
  double chi = von_neumann_entropy(avg, tol);
  for (std::size_t i = 0; i < e.size(); ++i)
    chi -= e.weights[i] * von_neumann_entropy(e.states[i], tol);

  double chi_rel = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i)
    chi_rel += e.weights[i] * relative_entropy(e.states[i], avg, tol);

  if (!(std::abs(chi - chi_rel) <= 1e-8 * std::max(1.0, std::abs(chi))))
    fail(ErrorCode::InvalidParameter,
         "Holevo quantity: entropy and relative-entropy forms disagree");
  return std::max(chi, 0.0);
}

double holevo_gap(const KrausChannel& phi, const Ensemble& e,
                  const Tolerance& tol) {
  if (e.dim() != phi.dim_in)
    fail(ErrorCode::DimensionMismatch,
         "ensemble dimension does not match channel input");
  std::vector<DensityMatrix> out;
  out.reserve(e.size());
  for (const DensityMatrix& rho : e.states) out.push_back(apply(phi, rho));
  Ensemble oe(e.weights, std::move(out));
  return holevo(e, tol) - holevo(oe, tol);
}

}  // namespace qrev
