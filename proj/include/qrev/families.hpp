// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <optional>
#include <vector>

#include "qrev/rational.hpp"

namespace qrev {

struct Interval {
  Rational lo, hi;  // nonempty: lo <= hi
};

// Axis-aligned box in R^n.
using Box = std::vector<Interval>;

// Union of boxes carrying one member function's support.
struct BoxSupport {
  int dim = 0;
  std::vector<Box> boxes;
};

BoxSupport make_box_support(int dim, std::vector<Box> boxes);

// Family of wave-function supports on R^{s_A} whose first d coordinates
// are the noise-free ones; members must stay disjoint under arbitrary
// shifts of the remaining s_A - d coordinates.
struct ReversedFamilySpec {
  int s_A = 0;
  int d = 0;
  std::vector<BoxSupport> members;
};

ReversedFamilySpec make_family_spec(int s_A, int d,
                                    std::vector<BoxSupport> members);

struct DisjointWitness {
  int member_i = 0, member_j = 0;
  int box_i = 0, box_j = 0;
  Box overlap;  // positive-measure overlap of the leading d coordinates
};

struct DisjointCheck {
  bool ok = false;
  std::optional<DisjointWitness> witness;
};

// Members i != j must have essentially disjoint supports after every shift
// of the trailing coordinates; for box supports this reduces to the
// projections onto the first d coordinates intersecting in measure zero.
// With d = s_A it degenerates to plain pairwise support disjointness.
DisjointCheck check_shift_disjoint(const ReversedFamilySpec& spec);

// Builds members phi_i(x_1..x_d) * tail(x_{d+1}..x_{s_A}) from pairwise
// disjoint head supports and one shared tail support. Errors with
// NotDisjoint when the heads overlap.
ReversedFamilySpec product_family(const std::vector<BoxSupport>& heads,
                                  const BoxSupport& tail);

// Single-mode family with one noise-free coordinate: members are intervals
// on the line. True iff the intervals pairwise overlap in measure zero.
bool b1_family_check(const std::vector<Interval>& intervals);

}  // namespace qrev
