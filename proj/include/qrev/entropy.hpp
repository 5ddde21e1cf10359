// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <vector>

#include "qrev/channels.hpp"

namespace qrev {

struct Ensemble {
  std::vector<double> weights;
  std::vector<DensityMatrix> states;

  Ensemble() = default;
  Ensemble(std::vector<double> w, std::vector<DensityMatrix> s);

  Eigen::Index dim() const { return states.empty() ? 0 : states[0].dim(); }
  std::size_t size() const { return states.size(); }
  DensityMatrix average() const;
};

// All quantities in nats; divide by ln 2 for bits.

double von_neumann_entropy(const DensityMatrix& rho, const Tolerance& tol = {});

// H(rho||sigma); +infinity when supp rho is not contained in supp sigma
// beyond rank_eps.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        const Tolerance& tol = {});

// chi = H(avg) - sum_i pi_i H(rho_i), cross-checked against the
// relative-entropy form sum_i pi_i H(rho_i||avg).
double holevo(const Ensemble& e, const Tolerance& tol = {});

// chi(input ensemble) - chi(output ensemble under phi). Nonnegative.
double holevo_gap(const KrausChannel& phi, const Ensemble& e,
                  const Tolerance& tol = {});

}  // namespace qrev
