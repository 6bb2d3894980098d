/* SPDX-License-Identifier: Apache-2.0
 * Copyright 2026 The qvac Authors
 *
 * C interface to the qvac library.
 *
 * Objects are opaque handles created by qvac_*_create/load functions and
 * released with the matching *_free. Every fallible call returns a
 * qvac_status; on failure a message for the calling thread is available
 * from qvac_last_error() until the next failing call on that thread.
 * Strings returned through char** are heap allocated and must be released
 * with qvac_string_free.
 *
 * All masses and momentum scales are in GeV, k^2 in GeV^2.
 */
#ifndef QVAC_QVAC_H
#define QVAC_QVAC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QVAC_BUILDING_LIBRARY)
#    define QVAC_API __declspec(dllexport)
#  else
#    define QVAC_API __declspec(dllimport)
#  endif
#else
#  define QVAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qvac_status
{
    QVAC_OK = 0,
    QVAC_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown enum value */
    QVAC_ERR_VALIDATION = 2,       /* malformed particle table or constants */
    QVAC_ERR_DOMAIN = 3,           /* numeric precondition or domain error */
    QVAC_ERR_IO = 4,               /* file could not be read or written */
    QVAC_ERR_INTERNAL = 5
} qvac_status;

typedef enum qvac_weighting
{
    QVAC_WEIGHTING_CHARGE_SQUARED = 0,
    QVAC_WEIGHTING_UNIFORM = 1
} qvac_weighting;

typedef enum qvac_threshold_mode
{
    QVAC_MODE_DECOUPLE = 0,
    QVAC_MODE_ALL = 1
} qvac_threshold_mode;

typedef enum qvac_report_format
{
    QVAC_FORMAT_TABLE = 0,
    QVAC_FORMAT_CSV = 1,
    QVAC_FORMAT_JSON = 2
} qvac_report_format;

typedef enum qvac_cutoff_kind
{
    QVAC_CUTOFF_PLANCK = 0,
    QVAC_CUTOFF_MASS = 1,    /* value is the mass in GeV */
    QVAC_CUTOFF_LOG_MASS = 2 /* value is ln(mass / GeV) */
} qvac_cutoff_kind;

typedef struct qvac_cutoff
{
    qvac_cutoff_kind kind;
    double value;
} qvac_cutoff;

typedef struct qvac_constants qvac_constants;
typedef struct qvac_particle_set qvac_particle_set;

typedef struct qvac_particle_info
{
    const char* name; /* owned by the set */
    const char* kind; /* static string */
    int64_t charge_num;
    int64_t charge_den;
    double mass_gev;
    int64_t multiplicity;
} qvac_particle_info;

typedef struct qvac_running_point
{
    double k2_abs;
    double alpha_inverse;
    int64_t included_weight_num;
    int64_t included_weight_den;
} qvac_running_point;

typedef struct qvac_landau_result
{
    double log_cutoff_gev;
    double cutoff_mass_gev; /* +inf beyond the double range */
    double residual;
    int64_t iterations;
} qvac_landau_result;

typedef struct qvac_vacuum_prediction
{
    double epsilon0_model;
    double epsilon0_ratio_to_measured;
    double alpha_inverse_model;
} qvac_vacuum_prediction;

QVAC_API const char* qvac_last_error(void);
QVAC_API const char* qvac_version(void);
QVAC_API void qvac_string_free(char* s);

/* constants */
QVAC_API qvac_status qvac_constants_standard(qvac_constants** out);
QVAC_API qvac_status qvac_constants_load_file(const char* path,
                                              qvac_constants** out);
QVAC_API qvac_status qvac_constants_parse(const char* text,
                                          qvac_constants** out);
QVAC_API void qvac_constants_free(qvac_constants* c);
QVAC_API qvac_status qvac_constants_alpha_inverse_measured(
    const qvac_constants* c, double* out);
QVAC_API qvac_status qvac_planck_mass(const qvac_constants* c, double* out);
QVAC_API qvac_status qvac_resolve_cutoff(qvac_cutoff cutoff,
                                         const qvac_constants* c,
                                         double* mass_gev,
                                         double* log_mass_gev);

/* particle sets */
QVAC_API qvac_status qvac_particles_builtin(qvac_particle_set** out);
QVAC_API qvac_status qvac_particles_load_file(const char* path,
                                              qvac_particle_set** out);
QVAC_API qvac_status qvac_particles_parse(const char* text,
                                          qvac_particle_set** out);
QVAC_API void qvac_particles_free(qvac_particle_set* set);
QVAC_API qvac_status qvac_particles_count(const qvac_particle_set* set,
                                          size_t* rows,
                                          int64_t* expanded);
QVAC_API qvac_status qvac_particles_get(const qvac_particle_set* set,
                                        size_t index,
                                        qvac_particle_info* out);
/* Exact charge-squared weight; QVAC_ERR_DOMAIN if it does not fit int64. */
QVAC_API qvac_status qvac_particles_weight(const qvac_particle_set* set,
                                           int64_t* num,
                                           int64_t* den);
QVAC_API qvac_status qvac_particles_serialize(const qvac_particle_set* set,
                                              char** out);
QVAC_API qvac_status qvac_particles_fingerprint(const qvac_particle_set* set,
                                                char** out);

/* vacuum model */
QVAC_API qvac_status qvac_log_term(double mass_gev,
                                   double cutoff_mass_gev,
                                   double* out);
QVAC_API qvac_status qvac_fudge_factor(const qvac_particle_set* set,
                                       qvac_cutoff cutoff,
                                       const qvac_constants* c,
                                       qvac_weighting weighting,
                                       double* f,
                                       int* any_negative_log);
QVAC_API qvac_status qvac_alpha_inverse_model(const qvac_particle_set* set,
                                              double f,
                                              double* out);
QVAC_API qvac_status qvac_epsilon0_model(const qvac_particle_set* set,
                                         double f,
                                         const qvac_constants* c,
                                         qvac_vacuum_prediction* out);

/* running coupling; k2 is signed, only its magnitude enters */
QVAC_API qvac_status qvac_alpha_inverse_running(const qvac_particle_set* set,
                                                double k2,
                                                double alpha0_inverse,
                                                qvac_threshold_mode mode,
                                                qvac_running_point* out);
QVAC_API qvac_status qvac_alpha_inverse_zero(const qvac_particle_set* set,
                                             qvac_cutoff cutoff,
                                             const qvac_constants* c,
                                             double* out);
QVAC_API qvac_status qvac_landau_pole(const qvac_particle_set* set,
                                      double alpha0_inverse,
                                      qvac_landau_result* out);
QVAC_API qvac_status qvac_landau_pole_bisection(const qvac_particle_set* set,
                                                double alpha0_inverse,
                                                qvac_landau_result* out);
QVAC_API qvac_status qvac_zeldovich_alpha_inverse(int64_t nu,
                                                  double mass_gev,
                                                  const qvac_constants* c,
                                                  double* out,
                                                  int* non_positive);
QVAC_API qvac_status qvac_zeldovich_species_count(double alpha_inverse,
                                                  double mass_gev,
                                                  const qvac_constants* c,
                                                  double* out);

/* reports; set_name labels the output metadata and may be NULL */
QVAC_API qvac_status qvac_sweep_csv(const qvac_particle_set* set,
                                    const char* set_name,
                                    double k2_min,
                                    double k2_max,
                                    int64_t points,
                                    double alpha0_inverse,
                                    qvac_threshold_mode mode,
                                    char** out);
QVAC_API qvac_status qvac_report(const qvac_particle_set* set,
                                 const char* set_name,
                                 qvac_cutoff cutoff,
                                 const qvac_constants* c,
                                 qvac_report_format format,
                                 char** out);

/* Formatting helpers shared with the CLI. */
QVAC_API qvac_status qvac_format_sig12(double value, char** out);
QVAC_API qvac_status qvac_format_sci_from_log(double log_value, char** out);

#ifdef __cplusplus
}
#endif

#endif /* QVAC_QVAC_H */
