// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/running_coupling.hpp"

#include "qvac/errors.hpp"
#include "qvac/summation.hpp"
#include "qvac/vacuum_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qvac {
namespace {

constexpr double pi = std::numbers::pi;

// Guard on the closed-form pole: the recomputed 1/alpha(0) must match.
constexpr double landau_residual_limit = 1e-9;

double weighted_log_sum(const ParticleSet& set, double log_cutoff_gev)
{
    CompensatedSum sum;
    for (const auto& p : set.particles()) {
        if (p.charge_over_e == 0)
            continue;
        sum += to_double(p.weight()) * log_term_from_log(p, log_cutoff_gev);
    }
    return sum.value();
}

double alpha_inverse_zero_at_log(const ParticleSet& set, double log_cutoff_gev)
{
    return weighted_log_sum(set, log_cutoff_gev) / (3 * pi);
}

void require_pole_inputs(const ParticleSet& set, double alpha0_inverse)
{
    if (set.empty() || set.weight() == 0)
        throw DomainError("Landau pole undefined without charged particles");
    if (!(std::isfinite(alpha0_inverse) && alpha0_inverse > 0))
        throw DomainError("alpha0 inverse must be finite and positive");
}

double relative_residual(const ParticleSet& set, double log_cutoff,
                         double alpha0_inverse)
{
    return (alpha_inverse_zero_at_log(set, log_cutoff) - alpha0_inverse)
           / alpha0_inverse;
}

} // namespace

OffShellness OffShellness::from_signed(double k2_gev2)
{
    if (k2_gev2 == 0 || !std::isfinite(k2_gev2))
        throw DomainError("k^2 must be finite and non-zero");
    return OffShellness(std::abs(k2_gev2), k2_gev2 > 0);
}

OffShellness::OffShellness(double k2_abs_gev2, bool timelike)
    : k2_abs_(k2_abs_gev2), timelike_(timelike)
{
    if (!(std::isfinite(k2_abs_gev2) && k2_abs_gev2 > 0))
        throw DomainError("|k^2| must be finite and positive");
}

RunningPoint alpha_inverse_running(const OffShellness& point,
                                   const ParticleSet& set,
                                   double alpha0_inverse,
                                   ThresholdMode mode)
{
    if (set.empty())
        throw DomainError("running coupling of an empty particle set");
    if (!(std::isfinite(alpha0_inverse) && alpha0_inverse > 0))
        throw DomainError("alpha0 inverse must be finite and positive");

    const double log_k2 = std::log(point.k2_abs());
    RunningPoint out;
    out.k2_abs = point.k2_abs();
    CompensatedSum sum;
    for (const auto& p : set.particles()) {
        // ln(|k^2| / m^2); positive exactly when m^2 < |k^2|
        const double term = log_k2 - 2.0 * p.log_mass();
        if (mode == ThresholdMode::decouple_below_threshold && !(term > 0))
            continue;
        const auto w = p.weight();
        out.included_weight += w;
        if (w != 0)
            sum += to_double(w) * term;
    }
    out.alpha_inverse = alpha0_inverse - sum.value() / (3 * pi);
    return out;
}

double alpha_inverse_zero(const ParticleSet& set,
                          const Cutoff& cutoff,
                          const PhysicalConstants& constants)
{
    if (set.empty())
        throw DomainError("alpha(0) of an empty particle set");
    return alpha_inverse_zero_at_log(set, resolve_log_cutoff(cutoff, constants));
}

LandauPoleResult landau_pole(const ParticleSet& set, double alpha0_inverse)
{
    require_pole_inputs(set, alpha0_inverse);

    // (2 / 3pi) sum w (ln L - ln m) = a  =>  ln L = 3 pi a / 2W + <ln m>_w
    const double weight = to_double(set.weight());
    CompensatedSum log_mass_sum;
    for (const auto& p : set.particles())
        if (p.charge_over_e != 0)
            log_mass_sum += to_double(p.weight()) * p.log_mass();

    LandauPoleResult out;
    out.log_cutoff_gev = 3 * pi * alpha0_inverse / (2 * weight)
                         + log_mass_sum.value() / weight;
    out.cutoff_mass_gev = std::exp(out.log_cutoff_gev);
    out.residual = relative_residual(set, out.log_cutoff_gev, alpha0_inverse);
    out.iterations = 0;
    if (!(std::abs(out.residual) <= landau_residual_limit))
        throw DomainError("Landau pole residual out of tolerance");
    return out;
}

LandauPoleResult landau_pole_bisection(const ParticleSet& set,
                                       double alpha0_inverse,
                                       double log_tolerance)
{
    require_pole_inputs(set, alpha0_inverse);

    const auto g = [&](double log_cutoff) {
        return alpha_inverse_zero_at_log(set, log_cutoff) - alpha0_inverse;
    };

    // Below every charged mass all log terms are non-positive, so g < 0.
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& p : set.particles())
        if (p.charge_over_e != 0)
            lo = std::min(lo, p.log_mass());
    double step = 1.0;
    double hi = lo + step;
    while (g(hi) < 0) {
        lo = hi;
        step *= 2;
        hi = lo + step;
        if (!std::isfinite(hi))
            throw DomainError("Landau pole bracket diverged");
    }

    LandauPoleResult out;
    while (hi - lo > log_tolerance * std::max(1.0, std::abs(lo))) {
        const double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi)
            break;
        (g(mid) < 0 ? lo : hi) = mid;
        ++out.iterations;
    }
    out.log_cutoff_gev = lo + (hi - lo) / 2;
    out.cutoff_mass_gev = std::exp(out.log_cutoff_gev);
    out.residual = relative_residual(set, out.log_cutoff_gev, alpha0_inverse);
    return out;
}

ZeldovichResult zeldovich_alpha_inverse(std::int64_t nu,
                                        double mass_gev,
                                        const PhysicalConstants& constants)
{
    if (nu < 1)
        throw DomainError("species count must be at least 1");
    if (!(std::isfinite(mass_gev) && mass_gev > 0))
        throw DomainError("mass must be finite and positive");
    const double log_arg
        = 2.0 * (std::log(planck_mass(constants)) - std::log(mass_gev));
    ZeldovichResult out;
    out.alpha_inverse = static_cast<double>(nu) * log_arg / (3 * pi);
    out.non_positive = !(out.alpha_inverse > 0);
    return out;
}

double zeldovich_species_count(double alpha_inverse,
                               double mass_gev,
                               const PhysicalConstants& constants)
{
    if (!(std::isfinite(alpha_inverse) && alpha_inverse > 0))
        throw DomainError("alpha inverse must be finite and positive");
    if (!(std::isfinite(mass_gev) && mass_gev > 0))
        throw DomainError("mass must be finite and positive");
    const double half_log = std::log(planck_mass(constants)) - std::log(mass_gev);
    if (!(half_log > 0))
        throw DomainError("mass must lie below the Planck mass");
    return 3 * pi * alpha_inverse / (2 * half_log);
}

} // namespace qvac
