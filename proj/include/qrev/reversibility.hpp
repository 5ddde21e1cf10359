// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrev/channels.hpp"

namespace qrev {

// Span of {V_k† V_l} for the canonical Kraus operators, stored as an
// HS-orthonormal basis. Always adjoint-closed and containing the identity.
struct OperatorSubspace {
  Eigen::Index dim = 0;  // underlying Hilbert space dimension
  std::vector<Mat> basis;
};

OperatorSubspace noncommutative_graph(const KrausChannel& phi,
                                      const Tolerance& tol = {});

// Partition of a state family into connectivity blocks of overlapping
// supports, with one support projector per block.
struct ONDPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<Mat> projectors;
};

ONDPartition ond_decompose(const StateFamily& family, const Tolerance& tol = {});

// Transpose-channel recovery map for phi at the reference state avg.
// Completed trace-preservingly off the support of phi(avg) by routing the
// missing weight to avg itself.
KrausChannel petz_recovery(const KrausChannel& phi, const DensityMatrix& avg,
                           const Tolerance& tol = {});

struct ReversibilityCheck {
  bool reversible = false;
  double residual = 0.0;  // max over states, trace distance
  std::vector<double> per_state;
};

// Tests recovery of every family member by the Petz map at the weighted
// average; weights must be strictly positive and sum to 1.
ReversibilityCheck is_reversible_for(const KrausChannel& phi,
                                     const StateFamily& family,
                                     const std::vector<double>& weights,
                                     const Tolerance& tol = {},
                                     double threshold = 1e-6);

struct CriterionCheck {
  bool holds = false;
  double residual = 0.0;  // max over blocks i != k and graph elements
};

// Block-annihilation test: P_i g P_k = 0 for all graph basis elements and
// distinct block projectors. threshold <= 0 uses tol.eq_eps.
CriterionCheck check_orthogonal_criterion(const KrausChannel& phi,
                                          const ONDPartition& partition,
                                          const Tolerance& tol = {},
                                          double threshold = 0.0);

struct CompressionCheck {
  bool holds = false;
  double residual = 0.0;  // max over graph elements of |PgP - lambda P|
};

// Tests whether every graph element compresses to a scalar on the range of
// the projector p (rank >= 2, else RankTooSmall).
CompressionCheck perfectly_reversible_on(const KrausChannel& phi, const Mat& p,
                                         const Tolerance& tol = {},
                                         double threshold = 0.0);

enum class TriState { No, Yes, Unknown };

const char* tri_state_name(TriState t);

struct PairCertificate {
  Vec left, right;  // orthonormal pair
  double residual = 0.0;
};

// Two-digit reversibility index. The first digit is decided exactly from
// the commutativity structure of the graph. The second digit rests on
// seeded searches: found witnesses are re-verified and certified, while
// absence is certified only in dimension <= 3 (dense grid + polishing);
// otherwise the digit is a lower bound and status reports the gap.
struct ReversibilityIndex {
  int ri1 = 0;
  int ri2 = 0;
  bool ri2_exact = true;
  std::string status;  // "certified" or "unknown_within_budget"

  std::optional<Mat> eigenbasis;                         // ri1 >= 1
  std::optional<std::pair<int, int>> repeated_diagonal;  // ri1 = 2
  std::optional<PairCertificate> kernel_pair;            // ri2 >= 1
  std::optional<PairCertificate> subspace_pair;          // ri2 = 2
  double best_rank_one_value = 0.0;  // smallest objective seen by searches
  double best_subspace_value = 0.0;
};

ReversibilityIndex reversibility_index(const KrausChannel& phi,
                                       const Tolerance& tol = {},
                                       std::uint64_t seed = 0,
                                       std::uint64_t budget = 64);

struct ZeroErrorReport {
  TriState classical = TriState::Unknown;  // one-shot classical capacity > 0
  TriState quantum = TriState::Unknown;    // one-shot quantum capacity > 0
};

ZeroErrorReport zero_error_positivity(const ReversibilityIndex& idx);

// Rank bound diagnostic for channels whose environment view is
// classical-quantum: every output sigma_k of the complementary channel must
// obey rank(sigma_k) <= min(dim ker(dual on the output support) + 1, output
// support dimension).
struct CqRankDiagnostic {
  bool applicable = false;
  int bound = 0;
  int max_sigma_rank = 0;
  bool ok = true;
};

CqRankDiagnostic cq_rank_diagnostic(const KrausChannel& phi,
                                    const Tolerance& tol = {},
                                    std::uint64_t seed = 0);

}  // namespace qrev
