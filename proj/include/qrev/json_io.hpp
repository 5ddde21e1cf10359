// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "qrev/entropy.hpp"
#include "qrev/families.hpp"
#include "qrev/gaussian.hpp"
#include "qrev/reversibility.hpp"
#include "qrev/symplectic.hpp"

namespace qrev {

using Json = nlohmann::json;

// Parses text, converting syntax errors to ParseError.
Json parse_json_text(const std::string& text);

// Deterministic serialization: sorted keys, floats at 17 significant
// digits with a trailing .0 for integral values, two-space indentation.
std::string dump_json_17(const Json& j, int indent = 2);

// ---- input decoding (all errors name the offending JSON path) ----

// {"dim_in", "dim_out", "kraus": [matrix, ...]} with matrix entries either
// numbers or [re, im] pairs.
KrausChannel channel_from_json(const Json& j, const Tolerance& tol = {});

struct FamilyInput {
  StateFamily family;
  std::vector<double> weights;  // uniform when the key is absent
};

// {"dim", "states": [matrix, ...], "weights"?: [...], "labels"?: [...]}.
FamilyInput family_from_json(const Json& j, const Tolerance& tol = {});

Ensemble ensemble_from_json(const Json& j, const Tolerance& tol = {});

// {"modes_in", "modes_out", "K": rows, "alpha": rows, "l"?: [...]}.
// All-string entries ("p/q") are taken exactly; otherwise every entry is
// read as a double and snapped to small denominators.
GaussianChannelParams gaussian_from_json(const Json& j);

// {"modes", "basis": [generator, ...]} with generators of length 2*modes.
SymplecticSubspace subspace_from_json(const Json& j);

// {"modes_A", "modes_B", "modes_D", "modes_E", "K", "L", "K_D", "L_D"}.
DilationBlocks blocks_from_json(const Json& j);

// Dilation blocks plus "alpha_D".
GaussianEnvironment environment_from_json(const Json& j);

// {"s_A", "d", "members": [{"boxes": [[[lo, hi], ...], ...]}, ...]}.
ReversedFamilySpec family_spec_from_json(const Json& j);

// ---- output encoding ----

Json json_from_mat(const Mat& m);          // rows of [re, im]
Json json_from_vec(const Vec& v);          // [re, im] entries
Json json_from_rational_matrix(const RationalMatrix& m);  // rows of strings
Json json_from_subspace(const SymplecticSubspace& l);     // generator list
Json json_from_box(const Box& b);

Json report_meta(const std::string& verb, std::uint64_t seed,
                 std::uint64_t budget, const Tolerance& tol);

Json channel_summary_json(const KrausChannel& phi);
Json reversibility_report(const KrausChannel& phi,
                          const ReversibilityIndex& idx,
                          const ZeroErrorReport& zero_error,
                          const CqRankDiagnostic& cq);
Json petz_report(const KrausChannel& phi, const FamilyInput& input,
                 const ReversibilityCheck& check, const ONDPartition& partition,
                 const CriterionCheck& criterion, double threshold);
Json ond_report(const FamilyInput& input, const ONDPartition& partition);
Json holevo_report(const Ensemble& e, double chi_in, bool has_channel,
                   double chi_out, double gap, bool bits);
Json gaussian_validation_json(const GaussianChannelParams& g,
                              const GaussianValidation& v);
Json gaussian_reversibility_report(const GaussianChannelParams& g,
                                   const GaussianValidation& v,
                                   const ReversedSubspaceReport& rep);
Json symplectic_basis_report(const SymplecticSubspace& l,
                             const SubspaceClassification& cls,
                             const SymplecticBasis& basis);
// lemma may be null (identities failed, lemma skipped).
Json dilation_report_json(const DilationBlocks& blocks,
                          const DilationReport& identities,
                          const MainLCheck* lemma);
Json weak_complementary_json(const WeakComplementaryParams& w);
Json family_spec_report(const ReversedFamilySpec& spec,
                        const DisjointCheck& check, const int* gaussian_d);

}  // namespace qrev
