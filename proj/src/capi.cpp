// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/qrev.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "qrev/json_io.hpp"
#include "qrev/version.hpp"

struct qrev_channel {
  qrev::KrausChannel ch;
};

struct qrev_family {
  qrev::FamilyInput in;
};

struct qrev_gaussian {
  qrev::GaussianChannelParams g;
};

namespace {

thread_local std::string g_last_error;

qrev_status map_code(qrev::ErrorCode c) {
  using qrev::ErrorCode;
  switch (c) {
    case ErrorCode::ParseError:
      return QREV_ERR_PARSE;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidShape:
      return QREV_ERR_DIMENSION;
    case ErrorCode::NotPSD:
    case ErrorCode::NotHermitian:
    case ErrorCode::NotAState:
    case ErrorCode::NotAChannel:
    case ErrorCode::NotOrthonormal:
    case ErrorCode::RankTooSmall:
    case ErrorCode::InvalidProbability:
    case ErrorCode::NotDisjoint:
      return QREV_ERR_DOMAIN;
    case ErrorCode::InvalidTolerance:
    case ErrorCode::InvalidParameter:
      return QREV_ERR_INVALID_ARGUMENT;
    case ErrorCode::SnapTooCoarse:
      return QREV_ERR_SNAP;
    case ErrorCode::DilationInvalid:
      return QREV_ERR_DILATION;
  }
  return QREV_ERR_INTERNAL;
}

template <typename F>
qrev_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const qrev::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QREV_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unrecognized failure";
    return QREV_ERR_INTERNAL;
  }
}

qrev_options effective(const qrev_options* opts) {
  qrev_options o;
  qrev_options_default(&o);
  if (opts != nullptr) o = *opts;
  return o;
}

qrev::Tolerance tolerance_of(const qrev_options& o) {
  qrev::Tolerance tol{o.rank_eps, o.eq_eps};
  tol.validate();
  return tol;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qrev_status emit(qrev::Json report, const char* verb, const qrev_options& o,
                 const qrev::Tolerance& tol, char** out,
                 qrev_status ok_status = QREV_OK) {
  if (out == nullptr) {
    g_last_error = "null report pointer";
    return QREV_ERR_INVALID_ARGUMENT;
  }
  report["meta"] = qrev::report_meta(verb, o.seed, o.budget, tol);
  *out = dup_string(qrev::dump_json_17(report));
  if (*out == nullptr) {
    g_last_error = "allocation failure";
    return QREV_ERR_INTERNAL;
  }
  return ok_status;
}

qrev_status require(bool ok, const char* what) {
  if (!ok) {
    g_last_error = what;
    return QREV_ERR_INVALID_ARGUMENT;
  }
  return QREV_OK;
}

}  // namespace

extern "C" {

void qrev_options_default(qrev_options* opts) {
  if (opts == nullptr) return;
  opts->seed = 0;
  opts->budget = 64;
  opts->rank_eps = 1e-9;
  opts->eq_eps = 1e-10;
  opts->bits = 0;
}

const char* qrev_version(void) { return QREV_VERSION_STRING; }

const char* qrev_last_error_message(void) { return g_last_error.c_str(); }

void qrev_string_free(char* s) { std::free(s); }

qrev_status qrev_channel_from_json(const char* json_text, qrev_channel** out) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(json_text && out, "null argument"); s != QREV_OK)
      return s;
    qrev::Json j = qrev::parse_json_text(json_text);
    *out = new qrev_channel{qrev::channel_from_json(j)};
    return QREV_OK;
  });
}

void qrev_channel_free(qrev_channel* c) { delete c; }

qrev_status qrev_channel_dims(const qrev_channel* c, int* dim_in,
                              int* dim_out) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(c != nullptr, "null channel"); s != QREV_OK)
      return s;
    if (dim_in != nullptr) *dim_in = static_cast<int>(c->ch.dim_in);
    if (dim_out != nullptr) *dim_out = static_cast<int>(c->ch.dim_out);
    return QREV_OK;
  });
}

qrev_status qrev_channel_validate(const qrev_channel* c,
                                  const qrev_options* opts,
                                  char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(c != nullptr, "null channel"); s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    qrev::Json r;
    r["channel"] = qrev::channel_summary_json(c->ch);
    r["valid"] = true;
    return emit(std::move(r), "validate", o, tol, report_json);
  });
}

qrev_status qrev_family_from_json(const char* json_text, qrev_family** out) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(json_text && out, "null argument"); s != QREV_OK)
      return s;
    qrev::Json j = qrev::parse_json_text(json_text);
    *out = new qrev_family{qrev::family_from_json(j)};
    return QREV_OK;
  });
}

void qrev_family_free(qrev_family* f) { delete f; }

qrev_status qrev_family_validate(const qrev_family* f,
                                 const qrev_options* opts,
                                 char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(f != nullptr, "null family"); s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    qrev::Json r;
    r["dim"] = static_cast<int>(f->in.family.dim());
    r["size"] = static_cast<int>(f->in.family.size());
    r["labels"] = f->in.family.labels;
    r["weights"] = f->in.weights;
    r["valid"] = true;
    return emit(std::move(r), "validate", o, tol, report_json);
  });
}

qrev_status qrev_gaussian_from_json(const char* json_text,
                                    qrev_gaussian** out) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(json_text && out, "null argument"); s != QREV_OK)
      return s;
    qrev::Json j = qrev::parse_json_text(json_text);
    *out = new qrev_gaussian{qrev::gaussian_from_json(j)};
    return QREV_OK;
  });
}

void qrev_gaussian_free(qrev_gaussian* g) { delete g; }

qrev_status qrev_gaussian_validate(const qrev_gaussian* g,
                                   const qrev_options* opts,
                                   char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(g != nullptr, "null gaussian channel");
        s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    const qrev::GaussianValidation v = qrev::validate(g->g, tol);
    qrev::Json r = qrev::gaussian_validation_json(g->g, v);
    return emit(std::move(r), "validate", o, tol, report_json);
  });
}

qrev_status qrev_reversibility_index(const qrev_channel* c,
                                     const qrev_options* opts,
                                     char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(c != nullptr, "null channel"); s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    const qrev::ReversibilityIndex idx =
        qrev::reversibility_index(c->ch, tol, o.seed, o.budget);
    const qrev::ZeroErrorReport ze = qrev::zero_error_positivity(idx);
    const qrev::CqRankDiagnostic cq =
        qrev::cq_rank_diagnostic(c->ch, tol, o.seed);
    qrev::Json r = qrev::reversibility_report(c->ch, idx, ze, cq);
    return emit(std::move(r), "ri", o, tol, report_json,
                idx.ri2_exact ? QREV_OK : QREV_UNKNOWN);
  });
}

qrev_status qrev_petz_check(const qrev_channel* c, const qrev_family* f,
                            const qrev_options* opts, char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(c && f, "null channel or family");
        s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    constexpr double kThreshold = 1e-6;
    const qrev::ReversibilityCheck check =
        qrev::is_reversible_for(c->ch, f->in.family, f->in.weights, tol,
                                kThreshold);
    const qrev::ONDPartition partition =
        qrev::ond_decompose(f->in.family, tol);
    const qrev::CriterionCheck criterion =
        qrev::check_orthogonal_criterion(c->ch, partition, tol, 1e-8);
    qrev::Json r = qrev::petz_report(c->ch, f->in, check, partition, criterion,
                                     kThreshold);
    return emit(std::move(r), "petz-check", o, tol, report_json);
  });
}

qrev_status qrev_ond_decompose(const qrev_family* f, const qrev_options* opts,
                               char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(f != nullptr, "null family"); s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    const qrev::ONDPartition partition =
        qrev::ond_decompose(f->in.family, tol);
    qrev::Json r = qrev::ond_report(f->in, partition);
    return emit(std::move(r), "ond", o, tol, report_json);
  });
}

qrev_status qrev_holevo(const qrev_family* f, const qrev_channel* c_or_null,
                        const qrev_options* opts, char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(f != nullptr, "null family"); s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    const qrev::Ensemble e(f->in.weights, f->in.family.states);
    const double chi_in = qrev::holevo(e, tol);
    double chi_out = 0.0, gap = 0.0;
    if (c_or_null != nullptr) {
      std::vector<qrev::DensityMatrix> outputs;
      outputs.reserve(e.size());
      for (const qrev::DensityMatrix& rho : e.states)
        outputs.push_back(qrev::apply(c_or_null->ch, rho));
      chi_out = qrev::holevo(qrev::Ensemble(e.weights, std::move(outputs)), tol);
      gap = qrev::holevo_gap(c_or_null->ch, e, tol);
    }
    qrev::Json r = qrev::holevo_report(e, chi_in, c_or_null != nullptr,
                                       chi_out, gap, o.bits != 0);
    return emit(std::move(r), "holevo", o, tol, report_json);
  });
}

qrev_status qrev_gaussian_reversibility_index(const qrev_gaussian* g,
                                              const qrev_options* opts,
                                              char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(g != nullptr, "null gaussian channel");
        s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    const qrev::GaussianValidation v = qrev::validate(g->g, tol);
    const qrev::ReversedSubspaceReport rep =
        qrev::reversed_subspace_report(g->g, tol);
    qrev::Json r = qrev::gaussian_reversibility_report(g->g, v, rep);
    return emit(std::move(r), "gaussian-ri", o, tol, report_json);
  });
}

qrev_status qrev_symplectic_basis(const char* subspace_json,
                                  const qrev_options* opts,
                                  char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(subspace_json != nullptr, "null subspace");
        s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    qrev::Json j = qrev::parse_json_text(subspace_json);
    const qrev::SymplecticSubspace l = qrev::subspace_from_json(j);
    const qrev::SubspaceClassification cls = qrev::classify_subspace(l);
    const qrev::SymplecticBasis basis = qrev::symplectic_basis_through(l);
    qrev::Json r = qrev::symplectic_basis_report(l, cls, basis);
    return emit(std::move(r), "symplectic-basis", o, tol, report_json);
  });
}

qrev_status qrev_dilation_check(const char* blocks_json,
                                const qrev_options* opts, char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(blocks_json != nullptr, "null blocks");
        s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    qrev::Json j = qrev::parse_json_text(blocks_json);
    const bool with_env = j.is_object() && j.contains("alpha_D");

    qrev::DilationBlocks blocks;
    qrev::GaussianEnvironment env;
    if (with_env) {
      env = qrev::environment_from_json(j);
      blocks = env.blocks;
    } else {
      blocks = qrev::blocks_from_json(j);
    }

    const qrev::DilationReport identities = qrev::verify_dilation(blocks);
    qrev::MainLCheck lemma;
    qrev::Json r = qrev::dilation_report_json(
        blocks, identities,
        identities.ok() ? (lemma = qrev::lemma_mainl_check(blocks), &lemma)
                        : nullptr);
    if (with_env && identities.ok()) {
      const qrev::GaussianChannelParams induced =
          qrev::channel_from_environment(env);
      r["induced_channel"] =
          qrev::gaussian_validation_json(induced, qrev::validate(induced, tol));
      r["weak_complementary"] = qrev::weak_complementary_json(
          qrev::weak_complementary_params(env, tol));
    }
    return emit(std::move(r), "dilation-check", o, tol, report_json);
  });
}

qrev_status qrev_family_spec_check(const char* spec_json,
                                   const char* gaussian_json_or_null,
                                   const qrev_options* opts,
                                   char** report_json) {
  return guarded([&]() -> qrev_status {
    if (qrev_status s = require(spec_json != nullptr, "null spec");
        s != QREV_OK)
      return s;
    const qrev_options o = effective(opts);
    const qrev::Tolerance tol = tolerance_of(o);
    const qrev::ReversedFamilySpec spec =
        qrev::family_spec_from_json(qrev::parse_json_text(spec_json));
    const qrev::DisjointCheck check = qrev::check_shift_disjoint(spec);

    int gaussian_d = 0;
    const int* cross = nullptr;
    if (gaussian_json_or_null != nullptr) {
      const qrev::GaussianChannelParams g =
          qrev::gaussian_from_json(qrev::parse_json_text(gaussian_json_or_null));
      gaussian_d = qrev::reversed_subspace_report(g, tol).d;
      cross = &gaussian_d;
    }
    qrev::Json r = qrev::family_spec_report(spec, check, cross);
    return emit(std::move(r), "family-check", o, tol, report_json);
  });
}

}  // extern "C"
