// Copyright 2026 The ocscz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the ocscz simulation library. All objects are opaque
 * handles released with their _free function. Functions return a status
 * code; on failure ocscz_last_error() describes the problem (per thread). */
#ifndef OCSCZ_OCSCZ_H_
#define OCSCZ_OCSCZ_H_

#include <stddef.h>

#if defined(OCSCZ_BUILDING_LIBRARY)
#define OCSCZ_API __attribute__((visibility("default")))
#else
#define OCSCZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  OCSCZ_OK = 0,
  OCSCZ_E_PARAMETER_DOMAIN = 1,
  OCSCZ_E_CONVERGENCE = 2,
  OCSCZ_E_NETWORK = 3,
  OCSCZ_E_NUMERICAL = 4,
  OCSCZ_E_INTEGRATION = 5,
  OCSCZ_E_DEGENERATE_LADDER = 6,
  OCSCZ_E_SYNTHESIS = 7,
  OCSCZ_E_PHASE_INFEASIBLE = 8,
  OCSCZ_E_LEAKAGE = 9,
  OCSCZ_E_INFEASIBLE_BIAS = 10,
  OCSCZ_E_UNIT = 11,
  OCSCZ_E_UNSUPPORTED_ANALYTIC = 12,
  OCSCZ_E_CONFIG = 13,
  OCSCZ_E_IO = 14,
  OCSCZ_E_INVALID_ARGUMENT = 100,
  OCSCZ_E_BUFFER_TOO_SMALL = 101,
  OCSCZ_E_INTERNAL = 102
} ocscz_status;

typedef enum { OCSCZ_SCHEME_OFFRES = 0, OCSCZ_SCHEME_DD = 1 } ocscz_scheme;

typedef struct ocscz_config ocscz_config;
typedef struct ocscz_report ocscz_report;
typedef struct ocscz_pulse ocscz_pulse;
typedef struct ocscz_run_result ocscz_run_result;

OCSCZ_API const char* ocscz_version(void);
OCSCZ_API const char* ocscz_last_error(void);
OCSCZ_API const char* ocscz_status_name(ocscz_status status);

/* Configuration. Keys are dotted "section.key" names. */
OCSCZ_API ocscz_status ocscz_config_new(ocscz_config** out);
OCSCZ_API ocscz_status ocscz_config_load(const char* path, ocscz_config** out);
OCSCZ_API ocscz_status ocscz_config_parse(const char* text, ocscz_config** out);
OCSCZ_API ocscz_status ocscz_config_set(ocscz_config* cfg, const char* key, const char* value);
/* Copies a NUL-terminated string into buf; *needed (optional) receives the
 * required size including the terminator. */
OCSCZ_API ocscz_status ocscz_config_get(const ocscz_config* cfg, const char* key, char* buf,
                                        size_t len, size_t* needed);
OCSCZ_API ocscz_status ocscz_config_to_text(const ocscz_config* cfg, char* buf, size_t len,
                                            size_t* needed);
OCSCZ_API void ocscz_config_free(ocscz_config* cfg);

/* Subcommands: "rx-spectrum", "transmon-dispersion", "sensitivity-map",
 * "synth-pulse", "simulate-gate", "sweep-fidelity". `option` selects the map
 * for sensitivity-map ("qubit", "coupler", "both"; NULL = both) and is
 * ignored otherwise. Writes out_path plus its manifest. */
OCSCZ_API ocscz_status ocscz_run(const ocscz_config* cfg, const char* subcommand,
                                 const char* out_path, const char* option,
                                 ocscz_run_result** result);
OCSCZ_API size_t ocscz_run_result_file_count(const ocscz_run_result* r);
OCSCZ_API const char* ocscz_run_result_file(const ocscz_run_result* r, size_t i);
OCSCZ_API size_t ocscz_run_result_warning_count(const ocscz_run_result* r);
OCSCZ_API const char* ocscz_run_result_warning(const ocscz_run_result* r, size_t i);
OCSCZ_API void ocscz_run_result_free(ocscz_run_result* r);

/* Gate simulation with the configured noise. */
OCSCZ_API ocscz_status ocscz_simulate_gate(const ocscz_config* cfg, ocscz_scheme scheme,
                                           ocscz_report** out);
/* Fields: F_total, F_e, F_g, F_e_coherent, theta, IF_qubitA, IF_qubitB,
 * IF_coupler, t_g_ns, delta_omega_c, leakage_00 .. leakage_11. */
OCSCZ_API ocscz_status ocscz_report_get(const ocscz_report* r, const char* field, double* value);
OCSCZ_API ocscz_status ocscz_report_to_text(const ocscz_report* r, char* buf, size_t len,
                                            size_t* needed);
OCSCZ_API void ocscz_report_free(ocscz_report* r);

/* Pulse synthesis at the configured operating point: the off-resonant CZ or
 * the GaMAM sqrt(CZ) used by the DD sequence. */
OCSCZ_API ocscz_status ocscz_pulse_synthesize(const ocscz_config* cfg, ocscz_scheme scheme,
                                              ocscz_pulse** out);
OCSCZ_API ocscz_status ocscz_pulse_info(const ocscz_pulse* p, double* t_g_ns,
                                        double* omega_d, double* Theta, size_t* n_samples);
OCSCZ_API ocscz_status ocscz_pulse_samples(const ocscz_pulse* p, double* re, double* im,
                                           size_t n);
OCSCZ_API ocscz_status ocscz_pulse_write_table(const ocscz_pulse* p, const char* path);
OCSCZ_API void ocscz_pulse_free(ocscz_pulse* p);

#ifdef __cplusplus
}
#endif

#endif /* OCSCZ_OCSCZ_H_ */
