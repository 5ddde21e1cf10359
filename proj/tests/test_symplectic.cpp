// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qrev/numerics.hpp"
#include "qrev/symplectic.hpp"

using namespace qrev;

namespace {

RationalMatrix col2(long a, long b) {
  RationalMatrix v(2, 1);
  v(0, 0) = a;
  v(1, 0) = b;
  return v;
}

RationalMatrix diag2(const Rational& a, const Rational& b) {
  RationalMatrix m = RationalMatrix::zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Mode-interleaved standard vectors: e_k has a 1 at row 2k, h_k at 2k+1.
RationalMatrix unit(int dim, int row) {
  RationalMatrix v(dim, 1);
  for (int i = 0; i < dim; ++i) v(i, 0) = 0;
  v(row, 0) = 1;
  return v;
}

SymplecticSubspace random_subspace(const SymplecticSpace& space,
                                   std::mt19937_64& rng, int generators) {
  std::uniform_int_distribution<int> entry(-2, 2);
  RationalMatrix gen(space.dim(), generators);
  for (int i = 0; i < space.dim(); ++i)
    for (int j = 0; j < generators; ++j) gen(i, j) = entry(rng);
  return make_subspace(space, gen);
}

DilationBlocks rotation_dilation() {
  DilationBlocks b;
  b.s_A = b.s_B = b.s_D = b.s_E = 1;
  const Rational c = rat(3, 5), s = rat(4, 5);
  b.K = diag2(c, c);
  b.L = diag2(s, s);
  b.K_D = diag2(-s, -s);
  b.L_D = diag2(c, c);
  return b;
}

}  // namespace

TEST_CASE("rational parsing and exact matrix algebra") {
  CHECK(rat_from_string("3/4") == rat(3, 4));
  CHECK(rat_from_string("-6/8") == rat(-3, 4));
  CHECK(rat_from_string(" 7 ") == rat(7));
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
  CHECK_THROWS_AS(rat_from_string("abc"), Error);
  CHECK(rat_from_double_exact(0.5) == rat(1, 2));
  CHECK(rat_from_double_exact(-2.25) == rat(-9, 4));
  CHECK(rat_to_string(rat(-3, 4)) == "-3/4");

  RationalMatrix a(2, 2);
  a(0, 0) = rat(1);
  a(0, 1) = rat(2);
  a(1, 0) = rat(3);
  a(1, 1) = rat(4);
  CHECK(a.determinant() == rat(-2));
  CHECK((a * a.inverse()) == RationalMatrix::identity(2));
  CHECK(a.rank() == 2);

  RationalMatrix singular(2, 2);
  singular(0, 0) = rat(1);
  singular(0, 1) = rat(2);
  singular(1, 0) = rat(2);
  singular(1, 1) = rat(4);
  CHECK(singular.determinant() == rat(0));
  CHECK(singular.rank() == 1);
  CHECK_THROWS_AS(singular.inverse(), Error);
  RationalMatrix k = singular.kernel_basis();
  CHECK(k.cols() == 1);
  CHECK((singular * k).is_zero());
}

TEST_CASE("standard form is mode-interleaved") {
  SymplecticSpace space = SymplecticSpace::standard(2);
  CHECK(space.form(unit(4, 0), unit(4, 1)) == rat(1));
  CHECK(space.form(unit(4, 1), unit(4, 0)) == rat(-1));
  CHECK(space.form(unit(4, 0), unit(4, 2)) == rat(0));
  CHECK(space.form(unit(4, 2), unit(4, 3)) == rat(1));
}

TEST_CASE("skew complement closed forms") {
  SymplecticSpace space = SymplecticSpace::standard(1);

  SymplecticSubspace line = make_subspace(space, col2(1, 0));
  SymplecticSubspace comp = skew_complement(line);
  CHECK(comp.dim() == 1);
  CHECK(comp.same_span(line));

  SymplecticSubspace whole =
      make_subspace(space, RationalMatrix::identity(2));
  CHECK(skew_complement(whole).dim() == 0);

  SymplecticSubspace trivial =
      make_subspace(space, RationalMatrix::zero(2, 0));
  CHECK(skew_complement(trivial).dim() == 2);
}

TEST_CASE("subspace classification") {
  SymplecticSpace two = SymplecticSpace::standard(2);

  SymplecticSubspace iso = make_subspace(two, unit(4, 0));
  CHECK(classify_subspace(iso).kind == SubspaceKind::Isotropic);

  RationalMatrix plane = RationalMatrix::hstack(unit(4, 0), unit(4, 1));
  SymplecticSubspace symp = make_subspace(two, plane);
  CHECK(classify_subspace(symp).kind == SubspaceKind::Symplectic);

  RationalMatrix mixed_gen = RationalMatrix::hstack(plane, unit(4, 2));
  SubspaceClassification cls =
      classify_subspace(make_subspace(two, mixed_gen));
  CHECK(cls.kind == SubspaceKind::Mixed);
  CHECK(cls.radical.dim() == 1);
  CHECK(cls.radical.contains(unit(4, 2)));

  SymplecticSubspace zero = make_subspace(two, RationalMatrix::zero(4, 0));
  CHECK(classify_subspace(zero).kind == SubspaceKind::Symplectic);
}

TEST_CASE("adapted basis through a diagonal line") {
  SymplecticSpace space = SymplecticSpace::standard(1);
  SymplecticSubspace diag = make_subspace(space, col2(1, 1));
  SymplecticBasis basis = symplectic_basis_through(diag);
  REQUIRE(basis.pairs.size() == 1);
  CHECK(basis.pairs[0].e_in_l);
  CHECK_FALSE(basis.pairs[0].h_in_l);
  CHECK(diag.contains(basis.pairs[0].e));
  CHECK(is_symplectic_transform(space, basis.change_of_basis()));
}

TEST_CASE("symplectic transform recognition") {
  SymplecticSpace space = SymplecticSpace::standard(1);
  CHECK(is_symplectic_transform(space, diag2(rat(2), rat(1, 2))));
  CHECK_FALSE(is_symplectic_transform(space, diag2(rat(2), rat(2))));
}

TEST_CASE("dilation identities for the two-mode rotation") {
  DilationBlocks blocks = rotation_dilation();
  CHECK(verify_dilation(blocks).ok());

  MainLCheck lemma = lemma_mainl_check(blocks);
  CHECK(lemma.ok());
  // K_D = -(4/5) I is invertible, so the noiseless input directions vanish.
  CHECK(lemma.dim_ker_kd == 0);
  CHECK(lemma.dim_ranl_perp == 0);

  DilationBlocks broken = rotation_dilation();
  broken.K(0, 0) = rat(1, 2);
  CHECK_FALSE(verify_dilation(broken).ok());
  CHECK_THROWS_AS(lemma_mainl_check(broken), Error);
}

TEST_CASE("identity dilation has a fully noiseless input") {
  DilationBlocks b;
  b.s_A = b.s_B = b.s_D = b.s_E = 1;
  b.K = RationalMatrix::identity(2);
  b.L = RationalMatrix::zero(2, 2);
  b.K_D = RationalMatrix::zero(2, 2);
  b.L_D = RationalMatrix::identity(2);
  REQUIRE(verify_dilation(b).ok());
  MainLCheck lemma = lemma_mainl_check(b);
  CHECK(lemma.ok());
  CHECK(lemma.dim_ker_kd == 2);
  CHECK(lemma.dim_ranl_perp == 2);
}

TEST_CASE("seeded symplectic transforms split into valid dilations") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int modes = 2 + static_cast<int>(seed % 2);
    RationalMatrix t = random_symplectic(modes, seed);
    SymplecticSpace space = SymplecticSpace::standard(modes);
    REQUIRE(is_symplectic_transform(space, t));

    const int s_a = 1, s_b = 1;
    DilationBlocks blocks = split_dilation(t, s_a, s_b);
    CHECK(verify_dilation(blocks).ok());
    MainLCheck lemma = lemma_mainl_check(blocks);
    CHECK(lemma.ok());
    CHECK(lemma.dim_ker_kd == lemma.dim_ranl_perp);
  }
}

TEST_CASE("seeded subspace properties") {
  auto rng = seeded_rng(67);
  std::uniform_int_distribution<int> mode_count(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int modes = mode_count(rng);
    SymplecticSpace space = SymplecticSpace::standard(modes);
    std::uniform_int_distribution<int> gen_count(0, 2 * modes);
    SymplecticSubspace l = random_subspace(space, rng, gen_count(rng));
    SymplecticSubspace perp = skew_complement(l);

    // Dimension pairing and double complement.
    CHECK(l.dim() + perp.dim() == 2 * modes);
    CHECK(skew_complement(perp).same_span(l));

    // The radical reported by classification is l intersected with its
    // skew complement, computed independently here.
    SubspaceClassification cls = classify_subspace(l);
    SymplecticSubspace radical = subspace_intersect(l, perp);
    CHECK(cls.radical.same_span(radical));
    if (cls.kind == SubspaceKind::Isotropic) CHECK(radical.dim() == l.dim());
    if (cls.kind == SubspaceKind::Symplectic) CHECK(radical.dim() == 0);
    if (cls.kind == SubspaceKind::Mixed) {
      CHECK(radical.dim() > 0);
      CHECK(radical.dim() < l.dim());
    }

    // The adapted basis is symplectic and holds exactly dim l vectors
    // spanning l.
    SymplecticBasis basis = symplectic_basis_through(l);
    RationalMatrix cob = basis.change_of_basis();
    CHECK(is_symplectic_transform(space, cob));
    RationalMatrix inside(2 * modes, 0);
    for (const BasisPair& p : basis.pairs) {
      if (p.e_in_l) inside = RationalMatrix::hstack(inside, p.e);
      if (p.h_in_l) inside = RationalMatrix::hstack(inside, p.h);
    }
    CHECK(inside.cols() == l.dim());
    if (l.dim() > 0) CHECK(make_subspace(space, inside).same_span(l));
  }
}

TEST_CASE("random symplectic transforms have determinant one") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    RationalMatrix t = random_symplectic(2, seed);
    CHECK(t.determinant() == rat(1));
  }
}
