// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
//---------------------------------------------------------------------------//
//! \file running_coupling.hpp
//! One-loop running of 1/alpha with momentum transfer, its value at zero
//! momentum for a given cutoff, and the Landau pole.
//---------------------------------------------------------------------------//
#pragma once

#include "qvac/constants.hpp"
#include "qvac/particles.hpp"

#include <cstdint>

namespace qvac {

//---------------------------------------------------------------------------//
/*!
 * Off-shellness k^2 = omega^2/c^2 - |k|^2 of the exchanged photon, in GeV^2.
 *
 * Only the magnitude enters the running; the sign is kept for reporting.
 */
class OffShellness
{
  public:
    //! From a signed k^2. Throws DomainError for zero or non-finite input.
    static OffShellness from_signed(double k2_gev2);
    //! Throws DomainError unless k2_abs is finite and positive.
    OffShellness(double k2_abs_gev2, bool timelike);

    double k2_abs() const noexcept { return k2_abs_; }
    bool timelike() const noexcept { return timelike_; }

  private:
    double k2_abs_;
    bool timelike_;
};

enum class ThresholdMode
{
    decouple_below_threshold, //!< only particles with m^2 < |k^2| contribute
    asymptotic_all,           //!< every particle contributes
};

struct RunningPoint
{
    double k2_abs = 0;
    double alpha_inverse = 0;
    Rational included_weight{0};
};

struct LandauPoleResult
{
    double log_cutoff_gev = 0; //!< ln(hbar Lambda_L / c / GeV)
    double cutoff_mass_gev = 0; //!< +inf when beyond the double range
    double residual = 0;        //!< relative, of 1/alpha(0) at the pole
    std::int64_t iterations = 0;

    Cutoff as_cutoff() const { return Cutoff::explicit_log(log_cutoff_gev); }
};

//! alpha0_inverse - (1/3pi) sum_j w_j ln(|k^2| / m_j^2). Beyond the Landau
//! pole the result is negative. Throws DomainError for an empty set or
//! alpha0_inverse <= 0.
RunningPoint alpha_inverse_running(const OffShellness& point,
                                   const ParticleSet& set,
                                   double alpha0_inverse,
                                   ThresholdMode mode
                                   = ThresholdMode::decouple_below_threshold);

//! (1/3pi) sum_j w_j ln(Lambda^2 / m_j^2), compensated summation.
//! Throws DomainError for an empty set.
double alpha_inverse_zero(const ParticleSet& set,
                          const Cutoff& cutoff,
                          const PhysicalConstants& constants);

//! Cutoff at which alpha_inverse_zero equals alpha0_inverse, closed form in
//! ln Lambda. Throws DomainError when W = 0 or alpha0_inverse <= 0.
LandauPoleResult landau_pole(const ParticleSet& set, double alpha0_inverse);

//! Independent bisection on ln Lambda; iterations counts halvings.
LandauPoleResult landau_pole_bisection(const ParticleSet& set,
                                       double alpha0_inverse,
                                       double log_tolerance = 1e-13);

struct ZeldovichResult
{
    double alpha_inverse = 0;
    bool non_positive = false; //!< mass at or above the Planck mass
};

//! (nu / 3pi) ln(hbar c / (G m^2)) for nu species of unit charge and equal
//! mass. Throws DomainError for nu < 1 or mass <= 0.
ZeldovichResult zeldovich_alpha_inverse(std::int64_t nu,
                                        double mass_gev,
                                        const PhysicalConstants& constants);

//! Inverse of zeldovich_alpha_inverse in nu, as a real number. Throws
//! DomainError unless alpha_inverse > 0 and 0 < mass < Planck mass.
double zeldovich_species_count(double alpha_inverse,
                               double mass_gev,
                               const PhysicalConstants& constants);

} // namespace qvac
