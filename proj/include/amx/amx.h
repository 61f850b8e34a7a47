// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 amx contributors
//
// C interface to the amx angular-momentum library.
//
// Half-integers cross the boundary as twice their value (j = 3/2 is passed as 3).
// Every function returning amx_status leaves a message for amx_last_error() on failure;
// the message is per thread and valid until the next failing call on that thread.
#ifndef AMX_AMX_H
#define AMX_AMX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define AMX_API __attribute__((visibility("default")))
#else
#define AMX_API
#endif

typedef enum amx_status {
  AMX_OK = 0,
  AMX_ERR_DOMAIN = 1,
  AMX_ERR_POLE = 2,
  AMX_ERR_INCOMPATIBLE_RADICAND = 3,
  AMX_ERR_PARSE = 4,
  AMX_ERR_BUDGET = 5,
  AMX_ERR_CAUSTIC = 6,
  AMX_ERR_UNSUPPORTED = 7,
  AMX_ERR_INTERNAL = 8
} amx_status;

typedef enum amx_method {
  AMX_METHOD_AUTO = 0,
  AMX_METHOD_VDW = 1,
  AMX_METHOD_WIGNER = 2,
  AMX_METHOD_ORACLE = 3
} amx_method;

// Exact value sign * sqrt(rational), stored as prefactor * sqrt(squarefree integer).
typedef struct amx_value amx_value;
// Result of one acceptance criterion.
typedef struct amx_report amx_report;

typedef struct amx_su3_coupling {
  int lambda3, mu3;
  int k1, k2, k3;
  int64_t dimension;
} amx_su3_coupling;

AMX_API const char* amx_version(void);
AMX_API const char* amx_last_error(void);
AMX_API const char* amx_status_name(amx_status s);

// "3", "-3/2", "0". Decimals and non-lowest fractions are rejected.
AMX_API amx_status amx_halfint_parse(const char* text, int64_t* twice);

AMX_API amx_status amx_value_parse(const char* text, amx_value** out);
// Canonical rendering such as "-1*sqrt(1/3)". Writes at most cap bytes including the
// terminator; *needed receives the full length plus one.
AMX_API amx_status amx_value_str(const amx_value* v, char* buf, size_t cap, size_t* needed);
AMX_API double amx_value_to_double(const amx_value* v);
AMX_API int amx_value_is_zero(const amx_value* v);
AMX_API int amx_value_equal(const amx_value* a, const amx_value* b);
AMX_API void amx_value_free(amx_value* v);

// Exact zero for arguments violating the selection rules.
AMX_API amx_status amx_three_j(const int64_t twice_j[3], const int64_t twice_m[3], amx_method method,
                               amx_value** out);
// Quadrature evaluation; domain error for arguments outside the selection rules.
AMX_API amx_status amx_three_j_integral(const int64_t twice_j[3], const int64_t twice_m[3], int order,
                                        double* out);
// Order: j1 j2 j3 l1 l2 l3.
AMX_API amx_status amx_six_j(const int64_t twice[6], amx_value** out);
AMX_API amx_status amx_six_j_triple_sum(const int64_t twice[6], amx_value** out);

AMX_API amx_status amx_su3_dimension(int lambda, int mu, int64_t* out);
// Fills up to cap entries ordered by mu3; *count receives the total.
AMX_API amx_status amx_su3_decompose(int lambda1, int lambda2, amx_su3_coupling* out, size_t cap,
                                     size_t* count);
// (lambda1,mu1) x (lambda2,mu2) -> (lambda3,mu3); states are (p, q, r) triples.
AMX_API amx_status amx_su3_three_j(const int irreps[6], const int s1[3], const int s2[3], const int s3[3],
                                   amx_value** out);

AMX_API int amx_criterion_count(void);
// criterion in 1..amx_criterion_count(). ledger_path may be NULL for the default.
AMX_API amx_status amx_verify(int criterion, int quick, const char* ledger_path, amx_report** out);
AMX_API int amx_report_passed(const amx_report* r);
AMX_API const char* amx_report_title(const amx_report* r);
AMX_API double amx_report_seconds(const amx_report* r);
AMX_API double amx_report_time_limit(const amx_report* r);
AMX_API size_t amx_report_check_count(const amx_report* r);
// Strings stay valid until amx_report_free.
AMX_API amx_status amx_report_check(const amx_report* r, size_t index, const char** name, size_t* cases,
                                    size_t* failures, double* max_deviation, double* tolerance, int* passed,
                                    const char** detail);
AMX_API void amx_report_free(amx_report* r);

#ifdef __cplusplus
}
#endif

#endif  // AMX_AMX_H
