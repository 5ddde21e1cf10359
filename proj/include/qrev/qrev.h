/* Copyright 2026 The qrev developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QREV_QREV_H_
#define QREV_QREV_H_

#include <stdint.h>

#if defined(_WIN32)
#define QREV_API __declspec(dllexport)
#else
#define QREV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Nonnegative codes are outcomes, negative codes are failures. QREV_UNKNOWN
 * means the computation finished but could not certify a definite answer
 * within its budget; the report still carries the best bounds found. */
typedef enum qrev_status {
  QREV_OK = 0,
  QREV_UNKNOWN = 1,
  QREV_ERR_PARSE = -1,
  QREV_ERR_DIMENSION = -2,
  QREV_ERR_DOMAIN = -3,
  QREV_ERR_INVALID_ARGUMENT = -4,
  QREV_ERR_SNAP = -5,
  QREV_ERR_DILATION = -6,
  QREV_ERR_INTERNAL = -99
} qrev_status;

/* Opaque handles. Create from JSON text, free with the matching *_free. */
typedef struct qrev_channel qrev_channel;
typedef struct qrev_family qrev_family;
typedef struct qrev_gaussian qrev_gaussian;

typedef struct qrev_options {
  uint64_t seed;   /* base seed for all randomized searches */
  uint64_t budget; /* restart budget for witness searches */
  double rank_eps; /* relative rank / support cutoff */
  double eq_eps;   /* equality and invariant tolerance */
  int bits;        /* entropy units: 0 = nats, 1 = bits */
} qrev_options;

QREV_API void qrev_options_default(qrev_options* opts);

QREV_API const char* qrev_version(void);

/* Message for the most recent failing call on this thread. */
QREV_API const char* qrev_last_error_message(void);

/* Frees strings returned through report_json out-parameters. */
QREV_API void qrev_string_free(char* s);

/* {"dim_in", "dim_out", "kraus": [matrix, ...]}, matrix entries numbers or
 * [re, im] pairs. Rejects non-channels. */
QREV_API qrev_status qrev_channel_from_json(const char* json_text,
                                            qrev_channel** out);
QREV_API void qrev_channel_free(qrev_channel* c);
QREV_API qrev_status qrev_channel_dims(const qrev_channel* c, int* dim_in,
                                       int* dim_out);
QREV_API qrev_status qrev_channel_validate(const qrev_channel* c,
                                           const qrev_options* opts,
                                           char** report_json);

/* {"dim", "states": [...], "weights"?: [...], "labels"?: [...]}. */
QREV_API qrev_status qrev_family_from_json(const char* json_text,
                                           qrev_family** out);
QREV_API void qrev_family_free(qrev_family* f);
QREV_API qrev_status qrev_family_validate(const qrev_family* f,
                                          const qrev_options* opts,
                                          char** report_json);

/* {"modes_in", "modes_out", "K", "alpha", "l"?}; numeric entries are
 * snapped to small denominators, "p/q" strings are taken exactly. */
QREV_API qrev_status qrev_gaussian_from_json(const char* json_text,
                                             qrev_gaussian** out);
QREV_API void qrev_gaussian_free(qrev_gaussian* g);
QREV_API qrev_status qrev_gaussian_validate(const qrev_gaussian* g,
                                            const qrev_options* opts,
                                            char** report_json);

/* Two-digit reversibility index with certificates and zero-error
 * positivity. Returns QREV_UNKNOWN when the second digit is only a lower
 * bound within the search budget. */
QREV_API qrev_status qrev_reversibility_index(const qrev_channel* c,
                                              const qrev_options* opts,
                                              char** report_json);

/* Recovery test for a state family: transpose-channel recovery at the
 * weighted average, plus the support-partition criterion. */
QREV_API qrev_status qrev_petz_check(const qrev_channel* c,
                                     const qrev_family* f,
                                     const qrev_options* opts,
                                     char** report_json);

/* Partition of a family into blocks of overlapping supports. */
QREV_API qrev_status qrev_ond_decompose(const qrev_family* f,
                                        const qrev_options* opts,
                                        char** report_json);

/* Holevo quantity of the family read as an ensemble; with a channel also
 * the output quantity and the (nonnegative) gap. */
QREV_API qrev_status qrev_holevo(const qrev_family* f,
                                 const qrev_channel* c_or_null,
                                 const qrev_options* opts,
                                 char** report_json);

/* Index classification of a Gaussian channel by its noise-form kernel. */
QREV_API qrev_status qrev_gaussian_reversibility_index(const qrev_gaussian* g,
                                                       const qrev_options* opts,
                                                       char** report_json);

/* {"modes", "basis": [...]}: classification and an adapted symplectic
 * basis of the whole phase space. */
QREV_API qrev_status qrev_symplectic_basis(const char* subspace_json,
                                           const qrev_options* opts,
                                           char** report_json);

/* Dilation blocks {"modes_A", ..., "K", "L", "K_D", "L_D"}: the six
 * symplectic block identities and the kernel/range interplay. With
 * "alpha_D" also the induced channel and its weak complementary. */
QREV_API qrev_status qrev_dilation_check(const char* blocks_json,
                                         const qrev_options* opts,
                                         char** report_json);

/* Shift-disjointness of a reversed-family support spec; optionally
 * cross-checks its d against a Gaussian channel's reversed report. */
QREV_API qrev_status qrev_family_spec_check(const char* spec_json,
                                            const char* gaussian_json_or_null,
                                            const qrev_options* opts,
                                            char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QREV_QREV_H_ */
