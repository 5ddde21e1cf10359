// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qrev/gaussian.hpp"

using namespace qrev;

namespace {

RationalMatrix diag2(const Rational& a, const Rational& b) {
  RationalMatrix m = RationalMatrix::zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

GaussianChannelParams b1_channel() {
  return make_gaussian(1, 1, RationalMatrix::identity(2),
                       diag2(rat(0), rat(1, 4)), RationalMatrix::zero(2, 1));
}

GaussianEnvironment rotation_environment() {
  DilationBlocks b;
  b.s_A = b.s_B = b.s_D = b.s_E = 1;
  const Rational c = rat(3, 5), s = rat(4, 5);
  b.K = diag2(c, c);
  b.L = diag2(s, s);
  b.K_D = diag2(-s, -s);
  b.L_D = diag2(c, c);
  return GaussianEnvironment{b, diag2(rat(1, 2), rat(1, 2))};
}

}  // namespace

TEST_CASE("validation closed forms") {
  // Noise form zero with a symplectic transform: exactly valid.
  GaussianChannelParams noiseless =
      make_gaussian(1, 1, RationalMatrix::identity(2),
                    RationalMatrix::zero(2, 2), RationalMatrix::zero(2, 1));
  CHECK(validate(noiseless).ok);

  CHECK(validate(b1_channel()).ok);

  // Pure amplification without added noise violates the inequality by 3/2.
  GaussianChannelParams bad =
      make_gaussian(1, 1, diag2(rat(2), rat(2)), RationalMatrix::zero(2, 2),
                    RationalMatrix::zero(2, 1));
  GaussianValidation v = validate(bad);
  CHECK_FALSE(v.ok);
  CHECK(v.min_eig_minus == doctest::Approx(-1.5));
  CHECK(v.min_eig_plus == doctest::Approx(-1.5));

  CHECK_THROWS_AS(make_gaussian(1, 1, RationalMatrix::identity(2),
                                RationalMatrix::identity(2),
                                RationalMatrix::zero(3, 1)),
                  Error);
}

TEST_CASE("noise form kernel") {
  SymplecticSubspace k1 = kernel_Zf(b1_channel());
  CHECK(k1.dim() == 1);
  RationalMatrix e1(2, 1);
  e1(0, 0) = 1;
  e1(1, 0) = 0;
  CHECK(k1.contains(e1));

  GaussianChannelParams a1 = onemode_canonical(OneModeClass::A1);
  CHECK(kernel_Zf(a1).dim() == 0);
}

TEST_CASE("index classification of the canonical forms") {
  // Noiseless identity: both digits certified at 2.
  GaussianChannelParams noiseless =
      make_gaussian(1, 1, RationalMatrix::identity(2),
                    RationalMatrix::zero(2, 2), RationalMatrix::zero(2, 1));
  GaussianIndexReport rep = gaussian_reversibility_index(noiseless);
  CHECK(rep.index == GaussianIndex::I22);
  CHECK(rep.noiseless);
  CHECK(rep.ri1 == 2);
  CHECK(rep.ri2 == 2);

  // Full-rank noise: nothing comes back.
  CHECK(gaussian_reversibility_index(onemode_canonical(OneModeClass::A1))
            .index == GaussianIndex::I00);

  // One isotropic noise-free direction.
  GaussianIndexReport b1 = gaussian_reversibility_index(b1_channel());
  CHECK(b1.index == GaussianIndex::I01);
  CHECK(b1.kernel_kind == SubspaceKind::Isotropic);
  CHECK(b1.ri1 == 0);
  CHECK(b1.ri2 == 1);

  // A symplectic plane inside the kernel: perfectly preserved mode.
  RationalMatrix alpha4 = RationalMatrix::zero(4, 4);
  alpha4(2, 2) = 1;
  alpha4(3, 3) = 1;
  GaussianChannelParams two = make_gaussian(2, 2, RationalMatrix::identity(4),
                                            alpha4, RationalMatrix::zero(4, 1));
  GaussianIndexReport rep2 = gaussian_reversibility_index(two);
  CHECK(rep2.index == GaussianIndex::I02);
  CHECK(rep2.kernel_kind == SubspaceKind::Symplectic);
  CHECK_FALSE(rep2.narrative.empty());

  // Invalid parameters are refused.
  GaussianChannelParams bad =
      make_gaussian(1, 1, diag2(rat(2), rat(2)), RationalMatrix::zero(2, 2),
                    RationalMatrix::zero(2, 1));
  CHECK_THROWS_AS(gaussian_reversibility_index(bad), Error);
}

TEST_CASE("one-mode canonical table") {
  GaussianChannelParams a1 = onemode_canonical(OneModeClass::A1, rat(1));
  CHECK(a1.K.is_zero());
  CHECK(a1.alpha == diag2(rat(3, 2), rat(3, 2)));
  CHECK(validate(a1).ok);

  GaussianChannelParams a2 = onemode_canonical(OneModeClass::A2, rat(0));
  CHECK(a2.K(0, 0) == rat(1));
  CHECK(a2.K(1, 1) == rat(0));
  // The minimal admissible isotropic noise for the rank-one transform.
  CHECK(a2.alpha == diag2(rat(1, 2), rat(1, 2)));
  CHECK(validate(a2).ok);

  GaussianChannelParams b1 = onemode_canonical(OneModeClass::B1);
  CHECK(b1.K == RationalMatrix::identity(2));
  CHECK(b1.alpha == diag2(rat(0), rat(1, 4)));
  CHECK(validate(b1).ok);

  GaussianChannelParams b2 = onemode_canonical(OneModeClass::B2, rat(2));
  CHECK(b2.alpha == diag2(rat(2), rat(2)));
  CHECK(validate(b2).ok);
  // B2 with zero noise degenerates to the noiseless identity.
  CHECK(gaussian_reversibility_index(onemode_canonical(OneModeClass::B2))
            .index == GaussianIndex::I22);

  GaussianChannelParams c2 = onemode_canonical(OneModeClass::C, rat(0), rat(2));
  CHECK(c2.K == diag2(rat(2), rat(2)));
  CHECK(c2.alpha == diag2(rat(3, 2), rat(3, 2)));
  CHECK(validate(c2).ok);
  GaussianChannelParams chalf =
      onemode_canonical(OneModeClass::C, rat(0), rat(1, 2));
  CHECK(chalf.alpha == diag2(rat(3, 8), rat(3, 8)));
  CHECK(validate(chalf).ok);
  CHECK_THROWS_AS(onemode_canonical(OneModeClass::C, rat(0), rat(1)), Error);

  GaussianChannelParams d1 = onemode_canonical(OneModeClass::D, rat(0), rat(1));
  CHECK(d1.K == diag2(rat(1), rat(-1)));
  CHECK(d1.alpha == diag2(rat(1), rat(1)));
  CHECK(validate(d1).ok);

  CHECK_THROWS_AS(onemode_canonical(OneModeClass::A1, rat(-1)), Error);
}

TEST_CASE("environment-induced channel and weak complementary") {
  GaussianEnvironment env = rotation_environment();
  GaussianChannelParams induced = channel_from_environment(env);
  CHECK(induced.K == diag2(rat(3, 5), rat(3, 5)));
  CHECK(induced.alpha == diag2(rat(8, 25), rat(8, 25)));
  CHECK(validate(induced).ok);

  WeakComplementaryParams weak = weak_complementary_params(env);
  CHECK(weak.L == diag2(rat(4, 5), rat(4, 5)));
  CHECK(weak.alpha_w == diag2(rat(9, 50), rat(9, 50)));
  CHECK(weak.validity.ok);

  // K_D is invertible here, so the induced noise form has trivial kernel.
  CHECK(kernel_Zf(induced).dim() == 0);

  DilationBlocks broken = env.blocks;
  broken.K(0, 0) = rat(1);
  CHECK_THROWS_AS(channel_from_environment(GaussianEnvironment{broken, env.alpha_D}),
                  Error);
}

TEST_CASE("reversed subspace report for the attenuated line") {
  ReversedSubspaceReport rep = reversed_subspace_report(b1_channel());
  CHECK(rep.index.index == GaussianIndex::I01);
  CHECK(rep.image.dim() == 1);
  RationalMatrix e1(2, 1);
  e1(0, 0) = 1;
  e1(1, 0) = 0;
  CHECK(rep.image.contains(e1));
  CHECK(rep.image_kind == SubspaceKind::Isotropic);
  CHECK(rep.radical_dim == 1);
  CHECK(rep.d == 1);
  REQUIRE(!rep.basis.pairs.empty());
  CHECK(rep.basis.pairs[0].e_in_l);
  CHECK(rep.image.contains(rep.basis.pairs[0].e));
  CHECK_FALSE(rep.det_test_nonzero);
  CHECK(rep.det_test_agrees);
}

TEST_CASE("determinant test certifies full loss") {
  // A1 with K = 0: D = Delta has nonzero determinant, kernel is trivial.
  ReversedSubspaceReport rep =
      reversed_subspace_report(onemode_canonical(OneModeClass::A1));
  CHECK(rep.det_test_nonzero);
  CHECK(rep.det_test_agrees);
  CHECK(rep.index.index == GaussianIndex::I00);
  CHECK(rep.d == 0);
}

TEST_CASE("perfectly preserved mode yields d equal to the mode count") {
  RationalMatrix alpha4 = RationalMatrix::zero(4, 4);
  alpha4(2, 2) = 1;
  alpha4(3, 3) = 1;
  GaussianChannelParams two = make_gaussian(2, 2, RationalMatrix::identity(4),
                                            alpha4, RationalMatrix::zero(4, 1));
  ReversedSubspaceReport rep = reversed_subspace_report(two);
  CHECK(rep.image.dim() == 2);
  CHECK(rep.image_kind == SubspaceKind::Symplectic);
  CHECK(rep.radical_dim == 0);
  CHECK(rep.d == 1);
}

TEST_CASE("snapping doubles to rationals") {
  RealMat K(2, 2), alpha(2, 2);
  K << 1.0, 0.0, 0.0, 1.0;
  alpha << 0.25, 0.0, 0.0, 1.0 / 3.0;
  RealVec l = RealVec::Zero(2);
  GaussianChannelParams g = snap_gaussian(1, 1, K, alpha, l);
  CHECK(g.alpha(0, 0) == rat(1, 4));
  CHECK(g.alpha(1, 1) == rat(1, 3));
  CHECK(g.snap_distance < 1e-15);
  CHECK(g.snap_distance >= 0.0);

  // Denominator cap too small for the value: refused.
  CHECK_THROWS_AS(snap_gaussian(1, 1, K, alpha, l, 2, 1e-6), Error);

  // Asymmetric numeric alpha is symmetrized before snapping.
  RealMat skew(2, 2);
  skew << 0.25, 1e-14, -1e-14, 0.25;
  GaussianChannelParams gs = snap_gaussian(1, 1, K, skew, l);
  CHECK(gs.alpha(0, 1) == gs.alpha(1, 0));
}
