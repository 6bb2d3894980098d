// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/vacuum_model.hpp"

#include "qvac/errors.hpp"
#include "qvac/summation.hpp"

#include <cmath>
#include <numbers>

namespace qvac {
namespace {

constexpr double pi = std::numbers::pi;

void require_f(double f)
{
    if (!(std::isfinite(f) && f > 0))
        throw DomainError("fudge factor must be finite and positive");
}

} // namespace

double log_term_from_log(const Particle& particle, double log_cutoff_gev)
{
    return 2.0 * (log_cutoff_gev - particle.log_mass());
}

double log_term(const Particle& particle, double cutoff_mass_gev)
{
    if (!(cutoff_mass_gev > 0))
        throw DomainError("cutoff mass must be positive");
    return log_term_from_log(particle, std::log(cutoff_mass_gev));
}

FudgeFactorReport fudge_factor(const ParticleSet& set,
                               const Cutoff& cutoff,
                               const PhysicalConstants& constants,
                               Weighting weighting)
{
    if (set.empty())
        throw DomainError("fudge factor of an empty particle set");
    if (weighting == Weighting::charge_squared && set.weight() == 0)
        throw DomainError("charge-squared weighting needs a charged particle");

    FudgeFactorReport report;
    report.weighting = weighting;
    report.cutoff_mass_gev = resolve_cutoff(cutoff, constants);
    report.log_cutoff_gev = resolve_log_cutoff(cutoff, constants);

    CompensatedSum numerator;
    CompensatedSum denominator;
    for (const auto& p : set.particles()) {
        const double term = log_term_from_log(p, report.log_cutoff_gev);
        report.per_particle_logs.push_back({p.name, term, term < 0});
        report.any_negative = report.any_negative || term < 0;
        if (p.charge_over_e == 0)
            continue;
        const double w = weighting == Weighting::charge_squared
                             ? to_double(p.weight())
                             : static_cast<double>(p.multiplicity);
        numerator += w * term;
        denominator += w;
    }
    if (weighting == Weighting::uniform && denominator.value() == 0)
        throw DomainError("uniform weighting needs a charged particle");

    report.f = numerator.value() / denominator.value() / (12 * pi * pi);
    return report;
}

double alpha_inverse_model(const ParticleSet& set, double f)
{
    if (set.empty())
        throw DomainError("model alpha of an empty particle set");
    require_f(f);
    return 4 * pi * f * to_double(set.weight());
}

VacuumPrediction epsilon0_model(const ParticleSet& set,
                                double f,
                                const PhysicalConstants& constants)
{
    if (set.empty() || set.weight() == 0)
        throw DomainError("epsilon0 needs at least one charged particle");
    require_f(f);

    const double e = constants.elementary_charge_si();
    VacuumPrediction out;
    out.epsilon0_model = f * to_double(set.weight()) * e * e / constants.hbar_c_si();
    out.epsilon0_ratio_to_measured = out.epsilon0_model / constants.epsilon0_si();
    out.alpha_inverse_model = alpha_inverse_model(set, f);
    return out;
}

} // namespace qvac
