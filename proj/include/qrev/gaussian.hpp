// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <string>

#include "qrev/numerics.hpp"
#include "qrev/symplectic.hpp"

namespace qrev {

// Bosonic Gaussian channel from modes_in (= s_A) to modes_out (= s_B),
// parametrized by its action on characteristic functions: the transform
// K maps output phase vectors into the input space (2s_A x 2s_B), alpha
// is the added-noise form on the output space, l a drift. Entries are kept
// as exact rationals; irrational inputs enter through snap_gaussian.
struct GaussianChannelParams {
  int modes_in = 0;
  int modes_out = 0;
  RationalMatrix K;      // 2*modes_in x 2*modes_out
  RationalMatrix alpha;  // 2*modes_out x 2*modes_out, symmetric
  RationalMatrix l;      // 2*modes_out x 1
  double snap_distance = 0.0;
};

GaussianChannelParams make_gaussian(int modes_in, int modes_out,
                                    RationalMatrix K, RationalMatrix alpha,
                                    RationalMatrix l);

// Rounds floating-point parameters to rationals with denominator at most
// max_denom (continued-fraction best approximants with a grid fallback).
// Errors with SnapTooCoarse when any entry moves by more than max_dist.
GaussianChannelParams snap_gaussian(int modes_in, int modes_out,
                                    const RealMat& K, const RealMat& alpha,
                                    const RealVec& l,
                                    long max_denom = 1000000,
                                    double max_dist = 1e-6);

struct GaussianValidation {
  bool ok = false;
  bool alpha_symmetric = false;
  // Minimal eigenvalues of alpha -/+ (i/2)(Delta_B - K' Delta_A K).
  double min_eig_minus = 0.0;
  double min_eig_plus = 0.0;
};

GaussianValidation validate(const GaussianChannelParams& g,
                            const Tolerance& tol = {});

// Exact kernel of alpha, as a subspace of the output phase space.
SymplecticSubspace kernel_Zf(const GaussianChannelParams& g);

enum class GaussianIndex { I00, I01, I02, I22 };

const char* gaussian_index_name(GaussianIndex idx);

struct GaussianIndexReport {
  GaussianIndex index = GaussianIndex::I00;
  int ri1 = 0;
  int ri2 = 0;
  SymplecticSubspace kernel;
  SubspaceKind kernel_kind = SubspaceKind::Isotropic;
  bool noiseless = false;
  std::string narrative;
};

// Classification by the kernel of the noise form: trivial kernel -> 00,
// isotropic -> 01, kernel containing a symplectic plane -> 02, noiseless
// invertible channel -> 22. Requires validated parameters.
GaussianIndexReport gaussian_reversibility_index(const GaussianChannelParams& g,
                                                 const Tolerance& tol = {});

enum class OneModeClass { A1, A2, B1, B2, C, D };

// Canonical one-mode forms. N is the thermal parameter (N >= 0); k the
// gain parameter for classes C (k > 0, k != 1) and D (k > 0).
GaussianChannelParams onemode_canonical(OneModeClass cls,
                                        const Rational& N = Rational(0),
                                        const Rational& k = Rational(1));

// Gaussian dilation: symplectic blocks plus the covariance of the
// environment input state.
struct GaussianEnvironment {
  DilationBlocks blocks;
  RationalMatrix alpha_D;  // 2*s_D x 2*s_D
};

// Channel induced by a dilation: transform K, noise K_D' alpha_D K_D.
GaussianChannelParams channel_from_environment(const GaussianEnvironment& env);

struct WeakComplementaryParams {
  RationalMatrix L;        // 2*s_A x 2*s_E
  RationalMatrix alpha_w;  // L_D' alpha_D L_D
  GaussianValidation validity;
};

// Parameters of the channel into the (possibly mixed) environment of the
// dilation. Its validity inequality holds whenever the environment state
// is admissible; it is still checked and reported.
WeakComplementaryParams weak_complementary_params(const GaussianEnvironment& env,
                                                  const Tolerance& tol = {});

struct ReversedSubspaceReport {
  GaussianIndexReport index;
  SymplecticSubspace image;  // K(Z_f) inside the input phase space
  SubspaceKind image_kind = SubspaceKind::Isotropic;
  int radical_dim = 0;
  // Dimension of a maximal isotropic subspace of K(Z_f): the number of
  // independent commuting noise-free coordinates seen at the input.
  int d = 0;
  SymplecticBasis basis;  // basis of Z_A adapted to K(Z_f)
  bool det_test_nonzero = false;  // det(Delta_B - K' Delta_A K) != 0
  bool det_test_agrees = false;   // nonzero det forces a trivial kernel
};

ReversedSubspaceReport reversed_subspace_report(const GaussianChannelParams& g,
                                                const Tolerance& tol = {});

}  // namespace qrev
