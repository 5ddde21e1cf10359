// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <vector>

#include "qrev/rational.hpp"

namespace qrev {

// Phase space of s modes with the mode-interleaved form
// Delta = diag(J, ..., J), J = [[0,1],[-1,0]]: coordinate 2k is the
// position of mode k, coordinate 2k+1 its momentum.
struct SymplecticSpace {
  int modes = 0;
  RationalMatrix delta;

  static SymplecticSpace standard(int modes);

  int dim() const { return 2 * modes; }
  // u'ᵀ Delta v for single-column u, v.
  Rational form(const RationalMatrix& u, const RationalMatrix& v) const;
};

// Subspace stored as a full-column-rank basis matrix (2s x k).
struct SymplecticSubspace {
  SymplecticSpace space;
  RationalMatrix basis;

  int dim() const { return basis.cols(); }
  bool contains(const RationalMatrix& v) const;
  bool same_span(const SymplecticSubspace& o) const;
};

// Reduces the generator columns to an independent subset.
SymplecticSubspace make_subspace(const SymplecticSpace& space,
                                 const RationalMatrix& generators);

// {z : Delta(z, l) = 0 for all l in L}.
SymplecticSubspace skew_complement(const SymplecticSubspace& l);

SymplecticSubspace subspace_intersect(const SymplecticSubspace& a,
                                      const SymplecticSubspace& b);

enum class SubspaceKind { Isotropic, Symplectic, Mixed };

struct SubspaceClassification {
  SubspaceKind kind;
  SymplecticSubspace radical;  // L ∩ L^perp
};

SubspaceClassification classify_subspace(const SymplecticSubspace& l);

struct BasisPair {
  RationalMatrix e;
  RationalMatrix h;
  bool e_in_l = false;
  bool h_in_l = false;
};

// Symplectic basis {e_k, h_k} of the whole space adapted to L: pairs fully
// inside L come first, then pairs whose e-leg spans the radical of L, then
// the rest. Exactly dim L of the vectors lie in (and span) L.
struct SymplecticBasis {
  SymplecticSpace space;
  std::vector<BasisPair> pairs;

  // Columns e_0, h_0, e_1, h_1, ...; symplectic w.r.t. the standard form.
  RationalMatrix change_of_basis() const;
};

SymplecticBasis symplectic_basis_through(const SymplecticSubspace& l);

bool is_symplectic_transform(const SymplecticSpace& space,
                             const RationalMatrix& t);

// Block decomposition of a symplectic transform T : Z_B ⊕ Z_E -> Z_A ⊕ Z_D,
//   T = [ K  L  ]      K : 2s_A x 2s_B,   L : 2s_A x 2s_E,
//       [ K_D L_D]     K_D : 2s_D x 2s_B, L_D : 2s_D x 2s_E,
// with s_A + s_D = s_B + s_E.
struct DilationBlocks {
  int s_A = 0, s_B = 0, s_D = 0, s_E = 0;
  RationalMatrix K, L, K_D, L_D;
};

struct DilationReport {
  bool forms_b = false;   // Kᵀ Δ_A K + K_Dᵀ Δ_D K_D = Δ_B
  bool forms_e = false;   // Lᵀ Δ_A L + L_Dᵀ Δ_D L_D = Δ_E
  bool forms_mix = false; // Kᵀ Δ_A L + K_Dᵀ Δ_D L_D = 0
  bool rows_a = false;    // K Δ_B Kᵀ + L Δ_E Lᵀ = Δ_A
  bool rows_d = false;    // K_D Δ_B K_Dᵀ + L_D Δ_E L_Dᵀ = Δ_D
  bool rows_mix = false;  // K Δ_B K_Dᵀ + L Δ_E L_Dᵀ = 0
  bool ok() const {
    return forms_b && forms_e && forms_mix && rows_a && rows_d && rows_mix;
  }
};

DilationReport verify_dilation(const DilationBlocks& blocks);

struct MainLCheck {
  bool perp_of_ranl_equals_image = false;  // [Ran L]^perp = K(ker K_D)
  bool inverse_direction = false;  // -Δ_B Kᵀ Δ_A maps it back onto ker K_D
  bool restriction_preserves_form = false;
  bool image_symplectic = false;
  int dim_ker_kd = 0;
  int dim_ranl_perp = 0;
  bool ok() const {
    return perp_of_ranl_equals_image && inverse_direction &&
           restriction_preserves_form && image_symplectic;
  }
};

// Checks the kernel/range interplay of a dilation's blocks. Errors with
// DilationInvalid when the blocks fail verify_dilation.
MainLCheck lemma_mainl_check(const DilationBlocks& blocks);

// Product of seeded symplectic transvections z -> z + c*Delta(z,v)*v.
RationalMatrix random_symplectic(int modes, std::uint64_t seed,
                                 int transvections = 0);

// Splits a symplectic T on s_B + s_E modes into dilation blocks with input
// split (s_B | s_E) and output split (s_A | s_D).
DilationBlocks split_dilation(const RationalMatrix& t, int s_A, int s_B);

}  // namespace qrev
