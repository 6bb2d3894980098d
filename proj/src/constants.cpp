// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/constants.hpp"

#include "qvac/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

namespace qvac {
namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

void require_positive(double v, const char* name)
{
    if (!(std::isfinite(v) && v > 0))
        throw ValidationError(std::string("constant ") + name
                              + " must be finite and positive");
}

} // namespace

PhysicalConstants PhysicalConstants::standard()
{
    // CODATA 2018. The Planck mass is sqrt(hbar c / G) with
    // G = 6.67430e-11 m^3 kg^-1 s^-2.
    return PhysicalConstants(Values{
        .hbar_c_gev_fm = 0.1973269804,
        .planck_mass_gev = 1.220890128209864e19,
        .alpha_inverse_measured = 137.035999084,
        .epsilon0_si = 8.8541878128e-12,
        .elementary_charge_si = 1.602176634e-19,
    });
}

PhysicalConstants::PhysicalConstants(const Values& values) : values_(values)
{
    require_positive(values.hbar_c_gev_fm, "hbar_c_gev_fm");
    require_positive(values.planck_mass_gev, "planck_mass_gev");
    require_positive(values.alpha_inverse_measured, "alpha_inverse_measured");
    require_positive(values.epsilon0_si, "epsilon0_si");
    require_positive(values.elementary_charge_si, "elementary_charge_si");
}

double PhysicalConstants::hbar_c_si() const noexcept
{
    // GeV -> J and fm -> m
    return values_.hbar_c_gev_fm * 1e9 * values_.elementary_charge_si * 1e-15;
}

double planck_mass(const PhysicalConstants& constants)
{
    return constants.values().planck_mass_gev;
}

double gravitational_coupling(const PhysicalConstants& constants)
{
    const double mp = planck_mass(constants);
    return 1.0 / (mp * mp);
}

double hierarchy_log(const PhysicalConstants& constants, double mass_gev)
{
    if (!(mass_gev > 0))
        throw DomainError("mass must be positive");
    // Split so that m^2 / m_P^2 cannot underflow.
    return -2.0 * std::log(mass_gev)
           - std::log(gravitational_coupling(constants));
}

PhysicalConstants load_constants(std::istream& in, const PhysicalConstants& base)
{
    auto values = base.values();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        view = trim(view.substr(0, view.find('#')));
        if (view.empty())
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError("constants line " + std::to_string(lineno)
                                  + ": expected key = value");
        const auto key = trim(view.substr(0, eq));
        const auto text = trim(view.substr(eq + 1));
        double v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw ValidationError("constants line " + std::to_string(lineno)
                                  + ": bad number '" + std::string(text) + "'");
        if (key == "hbar_c_gev_fm")
            values.hbar_c_gev_fm = v;
        else if (key == "planck_mass_gev")
            values.planck_mass_gev = v;
        else if (key == "alpha_inverse_measured")
            values.alpha_inverse_measured = v;
        else if (key == "epsilon0_si")
            values.epsilon0_si = v;
        else if (key == "elementary_charge_si")
            values.elementary_charge_si = v;
        else
            throw ValidationError("constants line " + std::to_string(lineno)
                                  + ": unknown key '" + std::string(key) + "'");
    }
    return PhysicalConstants(values);
}

PhysicalConstants load_constants_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open constants file " + path.string());
    return load_constants(in);
}

Cutoff Cutoff::explicit_mass(double mass_gev)
{
    if (!(std::isfinite(mass_gev) && mass_gev > 0))
        throw DomainError("cutoff mass must be finite and positive");
    return Cutoff{Explicit{mass_gev, std::log(mass_gev)}};
}

Cutoff Cutoff::explicit_log(double log_mass_gev)
{
    if (!std::isfinite(log_mass_gev))
        throw DomainError("cutoff log mass must be finite");
    return Cutoff{Explicit{std::exp(log_mass_gev), log_mass_gev}};
}

double resolve_cutoff(const Cutoff& cutoff, const PhysicalConstants& constants)
{
    if (const auto* e = std::get_if<Cutoff::Explicit>(&cutoff.value()))
        return e->mass_gev;
    return planck_mass(constants);
}

double resolve_log_cutoff(const Cutoff& cutoff, const PhysicalConstants& constants)
{
    if (const auto* e = std::get_if<Cutoff::Explicit>(&cutoff.value()))
        return e->log_mass_gev;
    return std::log(planck_mass(constants));
}

} // namespace qvac
