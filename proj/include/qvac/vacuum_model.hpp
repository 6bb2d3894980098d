// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
//---------------------------------------------------------------------------//
//! \file vacuum_model.hpp
//! Dielectric vacuum model: each charged species screens in proportion to
//! its charge squared, so 1/alpha = 4 pi f W with an order-unity factor f
//! fixed by averaging the one-loop log terms.
//---------------------------------------------------------------------------//
#pragma once

#include "qvac/constants.hpp"
#include "qvac/particles.hpp"

#include <string>
#include <vector>

namespace qvac {

enum class Weighting
{
    charge_squared, //!< weights multiplicity * (q/e)^2
    uniform,        //!< plain mean over expanded charged entries
};

struct LogTermEntry
{
    std::string name;
    double log_term;
    bool negative; //!< particle heavier than the cutoff
};

struct FudgeFactorReport
{
    double f = 0;
    Weighting weighting = Weighting::charge_squared;
    std::vector<LogTermEntry> per_particle_logs;
    double cutoff_mass_gev = 0;
    double log_cutoff_gev = 0;
    bool any_negative = false;
};

struct VacuumPrediction
{
    double epsilon0_model = 0; //!< F/m
    double epsilon0_ratio_to_measured = 0;
    double alpha_inverse_model = 0;
};

//! ln(Lambda^2 / m^2) = 2 ln(Lambda / m); negative above the cutoff.
double log_term(const Particle& particle, double cutoff_mass_gev);
//! Same, with the cutoff given as ln(Lambda / GeV).
double log_term_from_log(const Particle& particle, double log_cutoff_gev);

//! Weighted average of the log terms divided by 12 pi^2.
//! Throws DomainError for an empty set, or W = 0 under charge_squared.
FudgeFactorReport fudge_factor(const ParticleSet& set,
                               const Cutoff& cutoff,
                               const PhysicalConstants& constants,
                               Weighting weighting = Weighting::charge_squared);

//! 4 pi f W. Throws DomainError for an empty set or f <= 0.
double alpha_inverse_model(const ParticleSet& set, double f);

//! epsilon0 = f W e^2 / (hbar c) in SI, with its ratio to the measured
//! value. Throws DomainError for W = 0 or f <= 0.
VacuumPrediction epsilon0_model(const ParticleSet& set,
                                double f,
                                const PhysicalConstants& constants);

} // namespace qvac
