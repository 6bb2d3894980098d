// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
//---------------------------------------------------------------------------//
//! \file constants.hpp
//! Physical constants snapshot and the momentum cutoff.
//!
//! Every mass and momentum scale in the library is in GeV. SI units appear
//! only where the predicted vacuum permittivity is compared with the
//! measured one.
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

namespace qvac {

class PhysicalConstants
{
  public:
    struct Values
    {
        double hbar_c_gev_fm;          //!< reduced Planck constant times c
        double planck_mass_gev;        //!< sqrt(hbar c / G), non-reduced
        double alpha_inverse_measured; //!< low-energy 1/alpha
        double epsilon0_si;            //!< F/m
        double elementary_charge_si;   //!< C
    };

    //! CODATA 2018 snapshot compiled into the library.
    static PhysicalConstants standard();

    //! Throws ValidationError unless every value is finite and positive.
    explicit PhysicalConstants(const Values& values);

    const Values& values() const noexcept { return values_; }
    double hbar_c_gev_fm() const noexcept { return values_.hbar_c_gev_fm; }
    double alpha_inverse_measured() const noexcept
    {
        return values_.alpha_inverse_measured;
    }
    double epsilon0_si() const noexcept { return values_.epsilon0_si; }
    double elementary_charge_si() const noexcept
    {
        return values_.elementary_charge_si;
    }

    //! hbar c in J m.
    double hbar_c_si() const noexcept;

  private:
    Values values_;
};

//! Non-reduced Planck mass sqrt(hbar c / G) in GeV.
double planck_mass(const PhysicalConstants& constants);

//! G / (hbar c) in GeV^-2, the gravitational coupling implied by the
//! stored Planck mass.
double gravitational_coupling(const PhysicalConstants& constants);

//! ln(hbar c / (G m^2)) for a mass in GeV.
double hierarchy_log(const PhysicalConstants& constants, double mass_gev);

//! Reads `key = value` overrides on top of \p base. Recognised keys:
//! hbar_c_gev_fm, planck_mass_gev, alpha_inverse_measured, epsilon0_si,
//! elementary_charge_si. Blank lines and `#` comments are ignored.
PhysicalConstants load_constants(std::istream& in,
                                 const PhysicalConstants& base
                                 = PhysicalConstants::standard());
PhysicalConstants load_constants_file(const std::filesystem::path& path);

//---------------------------------------------------------------------------//
/*!
 * Ultraviolet momentum cutoff, expressed as a mass scale hbar*Lambda/c.
 *
 * Explicit cutoffs may be built from a log so that scales far beyond the
 * range of double (Landau poles of weakly charged sets) stay usable.
 */
class Cutoff
{
  public:
    struct PlanckMass
    {
    };
    struct Explicit
    {
        double mass_gev;
        double log_mass_gev;
    };

    static Cutoff planck() { return Cutoff{PlanckMass{}}; }
    //! Throws DomainError unless mass is finite and positive.
    static Cutoff explicit_mass(double mass_gev);
    //! Throws DomainError unless the log is finite.
    static Cutoff explicit_log(double log_mass_gev);

    bool is_planck() const noexcept
    {
        return std::holds_alternative<PlanckMass>(value_);
    }
    const std::variant<PlanckMass, Explicit>& value() const noexcept
    {
        return value_;
    }

  private:
    explicit Cutoff(std::variant<PlanckMass, Explicit> v) : value_(v) {}

    std::variant<PlanckMass, Explicit> value_;
};

//! Cutoff mass in GeV; may be +inf for an explicit log cutoff beyond the
//! double range.
double resolve_cutoff(const Cutoff& cutoff, const PhysicalConstants& constants);

//! ln(cutoff mass / GeV); always finite.
double resolve_log_cutoff(const Cutoff& cutoff,
                          const PhysicalConstants& constants);

} // namespace qvac
