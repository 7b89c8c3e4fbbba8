#ifndef KNAPFROB_H
#define KNAPFROB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Stable status codes; 0 means success. Mathematical negatives (infeasible,
 * no holes) are successes whose payload carries the answer. */
typedef enum kf_status {
  KF_OK = 0,
  KF_ERR_BAD_INPUT = 1,
  KF_ERR_RANK_DEFICIENT = 2,
  KF_ERR_RANK_CONFIG = 3,
  KF_ERR_NOT_PRIMITIVE = 4,
  KF_ERR_CONE_NOT_POINTED = 5,
  KF_ERR_BUDGET_EXCEEDED = 6,
  KF_ERR_UNSUPPORTED_DIMENSION = 7,
  KF_ERR_UNSUPPORTED_RANK = 8,
  KF_ERR_NOT_IN_CONE = 9,
  KF_ERR_NOT_INTERIOR = 10,
  KF_ERR_INEXACT = 11,
  KF_ERR_PRECONDITION_VIOLATED = 12,
  KF_ERR_INTERVAL_TOO_WIDE = 13,
  KF_ERR_INSUFFICIENT_DATA = 14,
  KF_ERR_TOO_LARGE = 15,
  KF_ERR_CONSTRUCTION_FAILED = 16,
  KF_ERR_BAD_DIRECTION = 17,
  KF_ERR_BAD_PARAMETER = 18,
  KF_ERR_PARSE = 19,
  KF_ERR_INTERNAL = 20
} kf_status;

typedef struct kf_instance kf_instance;

/* Library version string; static storage, do not free. */
const char* kf_version(void);

/* Message describing the most recent failure on this thread. */
const char* kf_last_error(void);

/* Frees strings returned through char** out parameters. */
void kf_string_free(char* s);

/* Parses {"m":..,"n":..,"A":[[..],..]} and validates the matrix (full row
 * rank, primitive, pointed cone). On success *out owns the instance. */
kf_status kf_instance_parse(const char* json_text, kf_instance** out);

void kf_instance_free(kf_instance* inst);

/* Validation verdict for an instance text without keeping the instance.
 * *report receives a JSON verdict in both the valid and invalid cases. */
kf_status kf_validate(const char* json_text, char** report);

/* b is a comma-separated integer vector of length m. */
kf_status kf_feasible(const kf_instance* inst, const char* b, uint64_t budget,
                      char** json_out);

/* a is a comma-separated positive coprime vector. */
kf_status kf_frobenius(const char* a, uint64_t budget, char** json_out);

/* mode: "auto" accepts a two-sided interval, "exact" demands a certificate. */
kf_status kf_gdiag(const kf_instance* inst, const char* mode, uint64_t budget,
                   int precision_bits, char** json_out);

kf_status kf_bound(const kf_instance* inst, int precision_bits, char** json_out);

/* t_cap is a rational like "30" or "61/2"; filter_all keeps nonconforming
 * rows (flagged) instead of dropping them. Emits CSV. */
kf_status kf_survey_csv(size_t m, size_t n, const char* t_cap, int filter_all,
                        uint64_t budget, uint64_t seed, char** csv_out);

kf_status kf_adversarial(size_t m, size_t n, size_t count, uint64_t budget,
                         char** json_out);

/* alpha is a comma-separated rational vector like "1/3,2/3"; ratio_floor a
 * rational lower bound the excess ratios are checked against. */
kf_status kf_direction(const char* alpha, size_t count, const char* ratio_floor,
                       uint64_t budget, char** json_out);

kf_status kf_kannan(const char* a, uint64_t budget, int precision_bits,
                    char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* KNAPFROB_H */
