// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
//---------------------------------------------------------------------------//
//! \file report.hpp
//! Sweeps of the running coupling and the summary report.
//---------------------------------------------------------------------------//
#pragma once

#include "qvac/constants.hpp"
#include "qvac/particles.hpp"
#include "qvac/running_coupling.hpp"
#include "qvac/vacuum_model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qvac {

struct SweepSpec
{
    double k2_min = 0;
    double k2_max = 0;
    std::int64_t points = 2;

    //! Throws DomainError unless 0 < k2_min < k2_max and points >= 2.
    void validate() const;
};

struct SweepTable
{
    std::string set_name;
    std::string set_fingerprint;
    ThresholdMode mode = ThresholdMode::decouple_below_threshold;
    double alpha0_inverse = 0;
    std::vector<RunningPoint> rows;
};

//! Log-spaced grid including both endpoints exactly.
SweepTable run_sweep(const SweepSpec& spec,
                     const ParticleSet& set,
                     double alpha0_inverse,
                     ThresholdMode mode,
                     std::string set_name = "custom");

//! `#` metadata lines, then `k2_abs_gev2,alpha_inverse,included_weight`.
void write_sweep_csv(std::ostream& out, const SweepTable& table);

struct SummaryReport
{
    std::string set_name;
    double cutoff_mass_gev = 0;
    double log_cutoff_gev = 0;
    bool cutoff_is_planck = false;

    struct Row
    {
        std::string name;
        std::string charge;
        double mass_gev;
        std::int64_t multiplicity;
        std::string weight;
        double log_term;
        bool negative;
    };
    std::vector<Row> rows;
    std::string charge_weight;
    std::int64_t expanded_count = 0;

    std::string log_max_name;
    double log_max = 0;
    std::string log_min_name;
    double log_min = 0;
    double log_spread = 0; //!< (max - min) / max, fraction

    double f_charge_squared = 0;
    double f_uniform = 0;
    double alpha_inverse_model = 0; //!< 4 pi f W with charge-squared f
    double alpha_inverse_zero = 0;
    double identity_relative_error = 0;
    double alpha_inverse_measured = 0;

    VacuumPrediction vacuum;
    double epsilon0_measured = 0;

    LandauPoleResult landau;
    double zeldovich_mass_gev = 0;
    double zeldovich_nu = 0;
};

//! Identity tolerance between 4 pi f W and 1/alpha(0).
inline constexpr double report_identity_tolerance = 1e-12;

//! Builds the report. Throws DomainError if 4 pi f W and 1/alpha(0)
//! disagree beyond report_identity_tolerance, or on any module error.
SummaryReport summary_report(const ParticleSet& set,
                         const Cutoff& cutoff,
                         const PhysicalConstants& constants,
                         std::string set_name = "custom");

enum class ReportFormat
{
    table,
    csv,
    json,
};

void write_report(std::ostream& out, const SummaryReport& report,
                  ReportFormat format);

} // namespace qvac
