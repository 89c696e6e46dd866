/* C interface to libtricusp: surface families with 3-divisible cusps,
 * singular-locus censuses over finite fields, and their certificates.
 *
 * Every call returns a tricusp_status; on failure tricusp_last_error() gives
 * the message for the calling thread. Strings returned through char** are
 * owned by the caller and released with tricusp_string_free. Handles are
 * immutable after creation and may be shared between threads. */

#ifndef TRICUSP_H
#define TRICUSP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TRICUSP_API __declspec(dllexport)
#else
#define TRICUSP_API __attribute__((visibility("default")))
#endif

typedef enum tricusp_status {
  TRICUSP_OK = 0,
  TRICUSP_E_ZERO_INVERSE,
  TRICUSP_E_INCOMPATIBLE_FIELDS,
  TRICUSP_E_CHARACTERISTIC_MISMATCH,
  TRICUSP_E_INVALID_FIELD,
  TRICUSP_E_FIELD_MISMATCH,
  TRICUSP_E_DIVISION_BY_ZERO_POLY,
  TRICUSP_E_SYNTAX,
  TRICUSP_E_UNKNOWN_VARIABLE,
  TRICUSP_E_POINT_NOT_IN_CHART,
  TRICUSP_E_NOT_ZERO_DIMENSIONAL,
  TRICUSP_E_DEGENERATE_COORDINATES,
  TRICUSP_E_POSITIVE_DIMENSIONAL,
  TRICUSP_E_NOT_SINGULAR,
  TRICUSP_E_DEGENERATE_INSTANCE,
  TRICUSP_E_CONSTRUCTION_FAILED,
  TRICUSP_E_DEGREE_MISMATCH,
  TRICUSP_E_FIELD_TOO_LARGE,
  TRICUSP_E_INVALID_ARGUMENT,
  TRICUSP_E_INTERNAL
} tricusp_status;

typedef struct tricusp_instance tricusp_instance;
typedef struct tricusp_report tricusp_report;

TRICUSP_API const char* tricusp_version(void);
TRICUSP_API const char* tricusp_schema_version(void);
TRICUSP_API const char* tricusp_status_name(tricusp_status status);
/* Message of the last failed call on this thread; "" when none. */
TRICUSP_API const char* tricusp_last_error(void);
TRICUSP_API void tricusp_string_free(char* s);

/* Families: cubic3, quartic6, quintic2a, quintic_case3, quintic_degeneration,
 * sexticA, sexticB. t is read only for quintic_degeneration (may be NULL
 * otherwise). The seed drives the reseed loop; the cubic ignores it. */
TRICUSP_API tricusp_status tricusp_construct(const char* family, uint64_t seed, uint32_t prime, const int64_t* t,
                                             tricusp_instance** out);
/* A surface given as polynomial text in x0..x3, without certificate. */
TRICUSP_API tricusp_status tricusp_instance_from_text(const char* poly, uint32_t prime, tricusp_instance** out);
TRICUSP_API tricusp_status tricusp_instance_from_json(const char* json, tricusp_instance** out);
TRICUSP_API tricusp_status tricusp_instance_to_json(const tricusp_instance* inst, char** out);
TRICUSP_API int tricusp_instance_degree(const tricusp_instance* inst);
TRICUSP_API void tricusp_instance_free(tricusp_instance* inst);

TRICUSP_API tricusp_status tricusp_verify(const tricusp_instance* inst, tricusp_report** out);
/* 1 for PASS, 0 for FAIL or a NULL report. */
TRICUSP_API int tricusp_report_pass(const tricusp_report* report);
TRICUSP_API tricusp_status tricusp_report_to_json(const tricusp_report* report, int include_timings, char** out);
TRICUSP_API void tricusp_report_free(tricusp_report* report);

/* Census of an arbitrary surface as JSON (points, tau, corank, classes). */
TRICUSP_API tricusp_status tricusp_classify(const char* poly, uint32_t prime, uint64_t seed, char** out);

/* Brute-force scan of P^3(F_q); the instance must be defined over F_q. */
TRICUSP_API tricusp_status tricusp_oracle_scan(const tricusp_instance* inst, uint32_t q, unsigned jobs, char** out);
/* Scan versus solver on F_q-rational points; *agree is 1 on exact agreement. */
TRICUSP_API tricusp_status tricusp_cross_check(const tricusp_instance* inst, uint32_t q, unsigned jobs, int* agree,
                                               char** out);

/* Minimal size of a 3-divisible cusp set on a surface of the given degree (3..6). */
TRICUSP_API tricusp_status tricusp_minimal_count(int degree, int* out);

#ifdef __cplusplus
}
#endif

#endif /* TRICUSP_H */
