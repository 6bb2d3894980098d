// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/qvac.h"

#include "qvac/constants.hpp"
#include "qvac/errors.hpp"
#include "qvac/format.hpp"
#include "qvac/particles.hpp"
#include "qvac/report.hpp"
#include "qvac/running_coupling.hpp"
#include "qvac/vacuum_model.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <sstream>
#include <string>

struct qvac_constants
{
    qvac::PhysicalConstants value;
};

struct qvac_particle_set
{
    qvac::ParticleSet value;
};

namespace {

thread_local std::string last_error;

qvac_status fail(qvac_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

template<class F>
qvac_status guarded(F&& body)
{
    try {
        body();
        return QVAC_OK;
    } catch (const qvac::ValidationError& e) {
        return fail(QVAC_ERR_VALIDATION, e.what());
    } catch (const qvac::DomainError& e) {
        return fail(QVAC_ERR_DOMAIN, e.what());
    } catch (const qvac::IoError& e) {
        return fail(QVAC_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QVAC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(QVAC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QVAC_ERR_INTERNAL, "unknown error");
    }
}

template<class... Ptrs>
bool any_null(const Ptrs*... ptrs)
{
    return ((ptrs == nullptr) || ...);
}

#define QVAC_REQUIRE(...)                                                     \
    do {                                                                      \
        if (any_null(__VA_ARGS__))                                            \
            return fail(QVAC_ERR_INVALID_ARGUMENT, "null argument");          \
    } while (0)

char* duplicate(const std::string& s)
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qvac::Cutoff to_cutoff(qvac_cutoff c)
{
    switch (c.kind) {
    case QVAC_CUTOFF_PLANCK: return qvac::Cutoff::planck();
    case QVAC_CUTOFF_MASS: return qvac::Cutoff::explicit_mass(c.value);
    case QVAC_CUTOFF_LOG_MASS: return qvac::Cutoff::explicit_log(c.value);
    }
    throw qvac::DomainError("unknown cutoff kind");
}

qvac::ThresholdMode to_mode(qvac_threshold_mode m)
{
    switch (m) {
    case QVAC_MODE_DECOUPLE: return qvac::ThresholdMode::decouple_below_threshold;
    case QVAC_MODE_ALL: return qvac::ThresholdMode::asymptotic_all;
    }
    throw qvac::DomainError("unknown threshold mode");
}

bool to_int64(const boost::multiprecision::cpp_int& v, int64_t& out)
{
    if (v > std::numeric_limits<int64_t>::max()
        || v < std::numeric_limits<int64_t>::min())
        return false;
    out = v.convert_to<int64_t>();
    return true;
}

void split_rational(const qvac::Rational& r, int64_t* num, int64_t* den)
{
    if (!to_int64(boost::multiprecision::numerator(r), *num)
        || !to_int64(boost::multiprecision::denominator(r), *den))
        throw qvac::DomainError("rational " + qvac::to_string(r)
                                + " does not fit in 64 bits");
}

void fill_landau(const qvac::LandauPoleResult& r, qvac_landau_result* out)
{
    out->log_cutoff_gev = r.log_cutoff_gev;
    out->cutoff_mass_gev = r.cutoff_mass_gev;
    out->residual = r.residual;
    out->iterations = r.iterations;
}

} // namespace

extern "C" {

const char* qvac_last_error(void)
{
    return last_error.c_str();
}

const char* qvac_version(void)
{
    return "1.0.0";
}

void qvac_string_free(char* s)
{
    std::free(s);
}

qvac_status qvac_constants_standard(qvac_constants** out)
{
    QVAC_REQUIRE(out);
    return guarded([&] { *out = new qvac_constants{qvac::PhysicalConstants::standard()}; });
}

qvac_status qvac_constants_load_file(const char* path, qvac_constants** out)
{
    QVAC_REQUIRE(path, out);
    return guarded([&] { *out = new qvac_constants{qvac::load_constants_file(path)}; });
}

qvac_status qvac_constants_parse(const char* text, qvac_constants** out)
{
    QVAC_REQUIRE(text, out);
    return guarded([&] {
        std::istringstream in(text);
        *out = new qvac_constants{qvac::load_constants(in)};
    });
}

void qvac_constants_free(qvac_constants* c)
{
    delete c;
}

qvac_status qvac_constants_alpha_inverse_measured(const qvac_constants* c,
                                                  double* out)
{
    QVAC_REQUIRE(c, out);
    *out = c->value.alpha_inverse_measured();
    return QVAC_OK;
}

qvac_status qvac_planck_mass(const qvac_constants* c, double* out)
{
    QVAC_REQUIRE(c, out);
    *out = qvac::planck_mass(c->value);
    return QVAC_OK;
}

qvac_status qvac_resolve_cutoff(qvac_cutoff cutoff,
                                const qvac_constants* c,
                                double* mass_gev,
                                double* log_mass_gev)
{
    QVAC_REQUIRE(c);
    return guarded([&] {
        const auto cut = to_cutoff(cutoff);
        if (mass_gev)
            *mass_gev = qvac::resolve_cutoff(cut, c->value);
        if (log_mass_gev)
            *log_mass_gev = qvac::resolve_log_cutoff(cut, c->value);
    });
}

qvac_status qvac_particles_builtin(qvac_particle_set** out)
{
    QVAC_REQUIRE(out);
    return guarded([&] { *out = new qvac_particle_set{qvac::builtin_standard_model()}; });
}

qvac_status qvac_particles_load_file(const char* path, qvac_particle_set** out)
{
    QVAC_REQUIRE(path, out);
    return guarded([&] { *out = new qvac_particle_set{qvac::load_particles_file(path)}; });
}

qvac_status qvac_particles_parse(const char* text, qvac_particle_set** out)
{
    QVAC_REQUIRE(text, out);
    return guarded([&] {
        std::istringstream in(text);
        *out = new qvac_particle_set{qvac::load_particles(in)};
    });
}

void qvac_particles_free(qvac_particle_set* set)
{
    delete set;
}

qvac_status qvac_particles_count(const qvac_particle_set* set,
                                 size_t* rows,
                                 int64_t* expanded)
{
    QVAC_REQUIRE(set);
    if (rows)
        *rows = set->value.size();
    if (expanded)
        *expanded = set->value.expanded_count();
    return QVAC_OK;
}

qvac_status qvac_particles_get(const qvac_particle_set* set,
                               size_t index,
                               qvac_particle_info* out)
{
    QVAC_REQUIRE(set, out);
    if (index >= set->value.size())
        return fail(QVAC_ERR_INVALID_ARGUMENT, "particle index out of range");
    return guarded([&] {
        const auto& p = set->value.particles()[index];
        out->name = p.name.c_str();
        out->kind = qvac::to_string(p.kind).data();
        split_rational(p.charge_over_e, &out->charge_num, &out->charge_den);
        out->mass_gev = p.mass_gev;
        out->multiplicity = p.multiplicity;
    });
}

qvac_status qvac_particles_weight(const qvac_particle_set* set,
                                  int64_t* num,
                                  int64_t* den)
{
    QVAC_REQUIRE(set, num, den);
    return guarded([&] { split_rational(set->value.weight(), num, den); });
}

qvac_status qvac_particles_serialize(const qvac_particle_set* set, char** out)
{
    QVAC_REQUIRE(set, out);
    return guarded([&] {
        std::ostringstream os;
        qvac::write_particles(os, set->value);
        *out = duplicate(os.str());
    });
}

qvac_status qvac_particles_fingerprint(const qvac_particle_set* set, char** out)
{
    QVAC_REQUIRE(set, out);
    return guarded([&] { *out = duplicate(qvac::fingerprint(set->value)); });
}

qvac_status qvac_log_term(double mass_gev, double cutoff_mass_gev, double* out)
{
    QVAC_REQUIRE(out);
    return guarded([&] {
        if (!(mass_gev > 0))
            throw qvac::DomainError("mass must be positive");
        qvac::Particle p{"x", qvac::Rational(1), mass_gev, 1, qvac::ParticleKind::custom};
        *out = qvac::log_term(p, cutoff_mass_gev);
    });
}

qvac_status qvac_fudge_factor(const qvac_particle_set* set,
                              qvac_cutoff cutoff,
                              const qvac_constants* c,
                              qvac_weighting weighting,
                              double* f,
                              int* any_negative_log)
{
    QVAC_REQUIRE(set, c, f);
    if (weighting != QVAC_WEIGHTING_CHARGE_SQUARED && weighting != QVAC_WEIGHTING_UNIFORM)
        return fail(QVAC_ERR_INVALID_ARGUMENT, "unknown weighting");
    return guarded([&] {
        const auto report = qvac::fudge_factor(
            set->value, to_cutoff(cutoff), c->value,
            weighting == QVAC_WEIGHTING_UNIFORM ? qvac::Weighting::uniform
                                                : qvac::Weighting::charge_squared);
        *f = report.f;
        if (any_negative_log)
            *any_negative_log = report.any_negative ? 1 : 0;
    });
}

qvac_status qvac_alpha_inverse_model(const qvac_particle_set* set, double f, double* out)
{
    QVAC_REQUIRE(set, out);
    return guarded([&] { *out = qvac::alpha_inverse_model(set->value, f); });
}

qvac_status qvac_epsilon0_model(const qvac_particle_set* set,
                                double f,
                                const qvac_constants* c,
                                qvac_vacuum_prediction* out)
{
    QVAC_REQUIRE(set, c, out);
    return guarded([&] {
        const auto p = qvac::epsilon0_model(set->value, f, c->value);
        out->epsilon0_model = p.epsilon0_model;
        out->epsilon0_ratio_to_measured = p.epsilon0_ratio_to_measured;
        out->alpha_inverse_model = p.alpha_inverse_model;
    });
}

qvac_status qvac_alpha_inverse_running(const qvac_particle_set* set,
                                       double k2,
                                       double alpha0_inverse,
                                       qvac_threshold_mode mode,
                                       qvac_running_point* out)
{
    QVAC_REQUIRE(set, out);
    return guarded([&] {
        const auto p = qvac::alpha_inverse_running(
            qvac::OffShellness::from_signed(k2), set->value, alpha0_inverse,
            to_mode(mode));
        out->k2_abs = p.k2_abs;
        out->alpha_inverse = p.alpha_inverse;
        split_rational(p.included_weight, &out->included_weight_num,
                       &out->included_weight_den);
    });
}

qvac_status qvac_alpha_inverse_zero(const qvac_particle_set* set,
                                    qvac_cutoff cutoff,
                                    const qvac_constants* c,
                                    double* out)
{
    QVAC_REQUIRE(set, c, out);
    return guarded([&] {
        *out = qvac::alpha_inverse_zero(set->value, to_cutoff(cutoff), c->value);
    });
}

qvac_status qvac_landau_pole(const qvac_particle_set* set,
                             double alpha0_inverse,
                             qvac_landau_result* out)
{
    QVAC_REQUIRE(set, out);
    return guarded([&] { fill_landau(qvac::landau_pole(set->value, alpha0_inverse), out); });
}

qvac_status qvac_landau_pole_bisection(const qvac_particle_set* set,
                                       double alpha0_inverse,
                                       qvac_landau_result* out)
{
    QVAC_REQUIRE(set, out);
    return guarded([&] {
        fill_landau(qvac::landau_pole_bisection(set->value, alpha0_inverse), out);
    });
}

qvac_status qvac_zeldovich_alpha_inverse(int64_t nu,
                                         double mass_gev,
                                         const qvac_constants* c,
                                         double* out,
                                         int* non_positive)
{
    QVAC_REQUIRE(c, out);
    return guarded([&] {
        const auto r = qvac::zeldovich_alpha_inverse(nu, mass_gev, c->value);
        *out = r.alpha_inverse;
        if (non_positive)
            *non_positive = r.non_positive ? 1 : 0;
    });
}

qvac_status qvac_zeldovich_species_count(double alpha_inverse,
                                         double mass_gev,
                                         const qvac_constants* c,
                                         double* out)
{
    QVAC_REQUIRE(c, out);
    return guarded([&] {
        *out = qvac::zeldovich_species_count(alpha_inverse, mass_gev, c->value);
    });
}

qvac_status qvac_sweep_csv(const qvac_particle_set* set,
                           const char* set_name,
                           double k2_min,
                           double k2_max,
                           int64_t points,
                           double alpha0_inverse,
                           qvac_threshold_mode mode,
                           char** out)
{
    QVAC_REQUIRE(set, out);
    return guarded([&] {
        const auto table = qvac::run_sweep({k2_min, k2_max, points}, set->value,
                                           alpha0_inverse, to_mode(mode),
                                           set_name ? set_name : "custom");
        std::ostringstream os;
        qvac::write_sweep_csv(os, table);
        *out = duplicate(os.str());
    });
}

qvac_status qvac_report(const qvac_particle_set* set,
                        const char* set_name,
                        qvac_cutoff cutoff,
                        const qvac_constants* c,
                        qvac_report_format format,
                        char** out)
{
    QVAC_REQUIRE(set, c, out);
    qvac::ReportFormat fmt{};
    switch (format) {
    case QVAC_FORMAT_TABLE: fmt = qvac::ReportFormat::table; break;
    case QVAC_FORMAT_CSV: fmt = qvac::ReportFormat::csv; break;
    case QVAC_FORMAT_JSON: fmt = qvac::ReportFormat::json; break;
    default: return fail(QVAC_ERR_INVALID_ARGUMENT, "unknown report format");
    }
    return guarded([&] {
        const auto report = qvac::summary_report(set->value, to_cutoff(cutoff), c->value,
                                               set_name ? set_name : "custom");
        std::ostringstream os;
        qvac::write_report(os, report, fmt);
        *out = duplicate(os.str());
    });
}

qvac_status qvac_format_sig12(double value, char** out)
{
    QVAC_REQUIRE(out);
    return guarded([&] { *out = duplicate(qvac::format_sig12(value)); });
}

qvac_status qvac_format_sci_from_log(double log_value, char** out)
{
    QVAC_REQUIRE(out);
    return guarded([&] { *out = duplicate(qvac::format_sci_from_log(log_value)); });
}

} // extern "C"
