// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>
#include <vector>

#include "qrev/numerics.hpp"

namespace qrev {

struct DensityMatrix {
  Mat m;

  DensityMatrix() = default;
  explicit DensityMatrix(Mat mat, const Tolerance& tol = {});

  Eigen::Index dim() const { return m.rows(); }

  // |v><v| with v normalized.
  static DensityMatrix pure(const Vec& v);
};

// Completely positive trace-preserving map in Kraus form.
struct KrausChannel {
  Eigen::Index dim_in = 0;
  Eigen::Index dim_out = 0;
  std::vector<Mat> kraus;

  KrausChannel() = default;
  KrausChannel(Eigen::Index din, Eigen::Index dout, std::vector<Mat> ops,
               const Tolerance& tol = {}, double completeness_eps = 1e-6);

  // max |sum_k V_k†V_k - I|.
  double completeness_residual() const;

  static KrausChannel identity(Eigen::Index d);
  static KrausChannel unitary(const Mat& u);
  // Projects onto the given orthonormal basis (default: computational).
  static KrausChannel dephasing(Eigen::Index d);
  static KrausChannel dephasing(const Mat& basis);
  // rho -> sigma * tr(rho).
  static KrausChannel depolarizing_to(const DensityMatrix& sigma,
                                      Eigen::Index dim_in);
};

struct StateFamily {
  std::vector<DensityMatrix> states;
  std::vector<std::string> labels;

  StateFamily() = default;
  StateFamily(std::vector<DensityMatrix> s, std::vector<std::string> l = {});

  Eigen::Index dim() const { return states.empty() ? 0 : states[0].dim(); }
  std::size_t size() const { return states.size(); }
};

DensityMatrix apply(const KrausChannel& phi, const DensityMatrix& rho);
// Linear extension of the channel to arbitrary matrices.
Mat apply_raw(const KrausChannel& phi, const Mat& x);
// Heisenberg dual: sum_k V_k† X V_k.
Mat dual_apply(const KrausChannel& phi, const Mat& x);

// sum_{ij} |i><j| ⊗ Phi(|i><j|), a (dim_in*dim_out)² matrix.
Mat choi_matrix(const KrausChannel& phi);

// Minimal Kraus representation with pairwise HS-orthogonal operators,
// obtained from the spectral decomposition of the Choi matrix.
KrausChannel canonicalize(const KrausChannel& phi, const Tolerance& tol = {});

bool channels_equal(const KrausChannel& a, const KrausChannel& b,
                    double eps = 1e-8);

// Channel to the environment of the Stinespring isometry built from the
// canonical Kraus representation.
KrausChannel complementary(const KrausChannel& phi, const Tolerance& tol = {});

// p*a + (1-p)*b, p strictly inside (0,1).
KrausChannel mixture(double p, const KrausChannel& a, const KrausChannel& b);

// Mixture of the complementaries of the given channels, i.e. the channel to
// a non-minimal environment whose purifying weights are the given ones.
KrausChannel weak_complementary(const std::vector<KrausChannel>& parts,
                                const std::vector<double>& weights,
                                const Tolerance& tol = {});

// rho -> sum_i <b_i|rho|b_i> sigma_i for an orthonormal basis {b_i}.
KrausChannel cq_channel(const Mat& basis,
                        const std::vector<DensityMatrix>& sigmas,
                        const Tolerance& tol = {});

// a ∘ b (b acts first).
KrausChannel compose(const KrausChannel& a, const KrausChannel& b);

KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b);

}  // namespace qrev
