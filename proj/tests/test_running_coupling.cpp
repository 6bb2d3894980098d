// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/errors.hpp"
#include "qvac/running_coupling.hpp"
#include "qvac/vacuum_model.hpp"

#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace qvac;
using qvac::testing::oracle;
using qvac::testing::rel_diff;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double mz2 = 91.19 * 91.19;

ParticleSet single(double mass, Rational charge = Rational(-1), int mult = 1)
{
    return ParticleSet({Particle{"x", charge, mass, mult, ParticleKind::custom}});
}

ParticleSet electron_only()
{
    return single(electron_mass_gev);
}

} // namespace

TEST(OffShellness, SignIsMetadata)
{
    const auto spacelike = OffShellness::from_signed(-4.0);
    EXPECT_EQ(spacelike.k2_abs(), 4.0);
    EXPECT_FALSE(spacelike.timelike());
    EXPECT_TRUE(OffShellness::from_signed(4.0).timelike());
    EXPECT_THROW(OffShellness::from_signed(0.0), DomainError);
    EXPECT_THROW(OffShellness(0.0, true), DomainError);
    EXPECT_THROW(OffShellness(-1.0, true), DomainError);
    EXPECT_THROW(OffShellness(std::nan(""), true), DomainError);
}

TEST(AlphaInverseRunning, VanishingLogAtMassShell)
{
    const auto set = single(2.0);
    for (auto mode : {ThresholdMode::decouple_below_threshold, ThresholdMode::asymptotic_all})
        EXPECT_EQ(alpha_inverse_running(OffShellness(4.0, true), set, 137.0, mode).alpha_inverse,
                  137.0);
}

TEST(AlphaInverseRunning, StandardModelAtZMassMatchesOracle)
{
    const auto sm = builtin_standard_model();
    const auto dec = alpha_inverse_running(OffShellness(mz2, true), sm, 137.036,
                                           ThresholdMode::decouple_below_threshold);
    EXPECT_LT(rel_diff(dec.alpha_inverse, oracle()["running_mz_decouple"]), 1e-12);
    EXPECT_EQ(to_string(dec.included_weight),
              oracle()["running_mz_decouple_weight"].get<std::string>());

    const auto all = alpha_inverse_running(OffShellness(mz2, true), sm, 137.036,
                                           ThresholdMode::asymptotic_all);
    EXPECT_LT(rel_diff(all.alpha_inverse, oracle()["running_mz_all"]), 1e-12);
    EXPECT_EQ(all.included_weight, Rational(9));
}

TEST(AlphaInverseRunning, DecoupledParticlesDoNotCount)
{
    const auto sm = builtin_standard_model();
    // below the electron mass nothing has switched on
    const auto p = alpha_inverse_running(OffShellness(1e-8, false), sm, 137.0);
    EXPECT_EQ(p.alpha_inverse, 137.0);
    EXPECT_EQ(p.included_weight, Rational(0));
}

TEST(AlphaInverseRunning, NegativeBeyondPole)
{
    const auto set = electron_only();
    const auto p = alpha_inverse_running(OffShellness(1e300, true), set, 10.0,
                                         ThresholdMode::asymptotic_all);
    EXPECT_LT(p.alpha_inverse, 0);
}

TEST(AlphaInverseRunning, Errors)
{
    EXPECT_THROW(alpha_inverse_running(OffShellness(1.0, true), ParticleSet{}, 137.0),
                 DomainError);
    EXPECT_THROW(alpha_inverse_running(OffShellness(1.0, true), electron_only(), 0.0),
                 DomainError);
}

TEST(AlphaInverseZero, StandardModelPlanckMatchesOracle)
{
    const auto c = PhysicalConstants::standard();
    const double a0 = alpha_inverse_zero(builtin_standard_model(), Cutoff::planck(), c);
    EXPECT_LT(rel_diff(a0, oracle()["alpha_inverse_zero_planck"]), 1e-12);
    EXPECT_NEAR(a0, 85, 5);
}

TEST(AlphaInverseZero, SingleParticleAtCutoff)
{
    const auto c = PhysicalConstants::standard();
    EXPECT_EQ(alpha_inverse_zero(single(3.5), Cutoff::explicit_mass(3.5), c), 0.0);
    EXPECT_THROW(alpha_inverse_zero(ParticleSet{}, Cutoff::planck(), c), DomainError);
}

TEST(AlphaInverseZero, ReducesToZeldovichForIdenticalSpecies)
{
    const auto c = PhysicalConstants::standard();
    for (std::int64_t nu : {1, 2, 7, 22, 100}) {
        const double m = 0.1056583755;
        const double a0 = alpha_inverse_zero(single(m, Rational(1), static_cast<int>(nu)),
                                             Cutoff::planck(), c);
        const double z = zeldovich_alpha_inverse(nu, m, c).alpha_inverse;
        EXPECT_LE(rel_diff(a0, z), 1e-12) << nu;
    }
}

TEST(LandauPole, StandardModelMatchesOracleBisection)
{
    const auto sm = builtin_standard_model();
    const auto pole = landau_pole(sm, 137.036);
    EXPECT_LT(rel_diff(pole.log_cutoff_gev, oracle()["landau_ln_gev_sm"]), 1e-12);
    EXPECT_EQ(pole.iterations, 0);
    EXPECT_LE(std::abs(pole.residual), 1e-12);
    EXPECT_GT(pole.cutoff_mass_gev, planck_mass(PhysicalConstants::standard()));
}

TEST(LandauPole, SingleElectronLogForm)
{
    const auto pole = landau_pole(electron_only(), 137.036);
    const double expected = oracle()["landau_ln_over_me_electron"];
    EXPECT_LT(rel_diff(pole.log_cutoff_gev - std::log(electron_mass_gev), expected), 1e-12);
    EXPECT_NEAR(expected, 3 * pi * 137.036 / 2, 1e-9);
    EXPECT_TRUE(std::isfinite(pole.cutoff_mass_gev));
}

TEST(LandauPole, RoundTripThroughAlphaInverseZero)
{
    const auto c = PhysicalConstants::standard();
    const auto sm = builtin_standard_model();
    for (double a : {1.0, 85.0, 137.036, 500.0}) {
        const auto pole = landau_pole(sm, a);
        EXPECT_LE(rel_diff(alpha_inverse_zero(sm, pole.as_cutoff(), c), a), 1e-9) << a;
    }
}

TEST(LandauPole, RunningVanishesAtPole)
{
    const auto sm = builtin_standard_model();
    const auto pole = landau_pole(sm, 137.036);
    const double k2 = std::exp(2 * pole.log_cutoff_gev);
    const auto p = alpha_inverse_running(OffShellness(k2, true), sm, 137.036,
                                         ThresholdMode::asymptotic_all);
    EXPECT_NEAR(p.alpha_inverse, 0.0, 1e-10);
}

TEST(LandauPole, WeakChargeBeyondDoubleRange)
{
    const auto set = single(1.0, Rational(1, 3));
    const auto pole = landau_pole(set, 137.036);
    EXPECT_TRUE(std::isinf(pole.cutoff_mass_gev));
    EXPECT_NEAR(pole.log_cutoff_gev, 3 * pi * 137.036 * 9 / 2, 1e-8);
    const auto c = PhysicalConstants::standard();
    EXPECT_LE(rel_diff(alpha_inverse_zero(set, pole.as_cutoff(), c), 137.036), 1e-9);
}

TEST(LandauPole, BisectionAgreesWithClosedForm)
{
    const auto sm = builtin_standard_model();
    const auto closed = landau_pole(sm, 137.036);
    const auto bis = landau_pole_bisection(sm, 137.036);
    EXPECT_LE(rel_diff(bis.log_cutoff_gev, closed.log_cutoff_gev), 1e-12);
    EXPECT_GT(bis.iterations, 0);
}

TEST(LandauPole, Errors)
{
    EXPECT_THROW(landau_pole(ParticleSet{}, 137.0), DomainError);
    EXPECT_THROW(landau_pole(single(1.0, Rational(0)), 137.0), DomainError);
    EXPECT_THROW(landau_pole(electron_only(), 0.0), DomainError);
    EXPECT_THROW(landau_pole_bisection(single(1.0, Rational(0)), 137.0), DomainError);
}

TEST(Zeldovich, VanishesAtPlanckMass)
{
    const auto c = PhysicalConstants::standard();
    const auto r = zeldovich_alpha_inverse(1, planck_mass(c), c);
    EXPECT_EQ(r.alpha_inverse, 0.0);
    EXPECT_TRUE(r.non_positive);
    EXPECT_TRUE(zeldovich_alpha_inverse(1, 2 * planck_mass(c), c).non_positive);
}

TEST(Zeldovich, Electron)
{
    const auto c = PhysicalConstants::standard();
    const auto r = zeldovich_alpha_inverse(1, electron_mass_gev, c);
    EXPECT_FALSE(r.non_positive);
    EXPECT_NEAR(r.alpha_inverse, 101 / (3 * pi), 0.05 * 101 / (3 * pi));
    EXPECT_LT(rel_diff(r.alpha_inverse, oracle()["zeldovich_alpha_inverse_electron"]), 1e-12);
}

TEST(Zeldovich, LinearInSpeciesCount)
{
    const auto c = PhysicalConstants::standard();
    for (std::int64_t nu : {1, 3, 11})
        EXPECT_EQ(zeldovich_alpha_inverse(2 * nu, 80.377, c).alpha_inverse,
                  2 * zeldovich_alpha_inverse(nu, 80.377, c).alpha_inverse);
}

TEST(Zeldovich, HierarchyLogForm)
{
    const auto c = PhysicalConstants::standard();
    const double m = 1.77686;
    EXPECT_LE(rel_diff(zeldovich_alpha_inverse(5, m, c).alpha_inverse,
                       5 * hierarchy_log(c, m) / (3 * pi)),
              1e-13);
}

TEST(Zeldovich, SpeciesCount)
{
    const auto c = PhysicalConstants::standard();
    const double nu = zeldovich_species_count(137.036, electron_mass_gev, c);
    EXPECT_LT(rel_diff(nu, oracle()["zeldovich_nu_electron"]), 1e-12);
    // with the rounded log of 101
    EXPECT_NEAR(3 * pi * 137.036 / 101, 12.8, 0.05);
    EXPECT_NEAR(nu, 12.8, 0.4);
}

TEST(Zeldovich, InverseRoundTrip)
{
    const auto c = PhysicalConstants::standard();
    for (std::int64_t nu : {1, 4, 22, 1000})
        for (double m : {1e-6, electron_mass_gev, 80.377, 1e15}) {
            const double a = zeldovich_alpha_inverse(nu, m, c).alpha_inverse;
            EXPECT_LE(rel_diff(zeldovich_species_count(a, m, c), static_cast<double>(nu)),
                      1e-12);
        }
}

TEST(Zeldovich, SpeciesCountVanishesWithAlpha)
{
    const auto c = PhysicalConstants::standard();
    EXPECT_LT(zeldovich_species_count(1e-300, electron_mass_gev, c), 1e-298);
    EXPECT_GT(zeldovich_species_count(1e-300, electron_mass_gev, c), 0);
}

TEST(Zeldovich, Errors)
{
    const auto c = PhysicalConstants::standard();
    EXPECT_THROW(zeldovich_alpha_inverse(0, 1.0, c), DomainError);
    EXPECT_THROW(zeldovich_alpha_inverse(1, 0.0, c), DomainError);
    EXPECT_THROW(zeldovich_species_count(137.0, planck_mass(c), c), DomainError);
    EXPECT_THROW(zeldovich_species_count(137.0, 2 * planck_mass(c), c), DomainError);
    EXPECT_THROW(zeldovich_species_count(0.0, 1.0, c), DomainError);
    EXPECT_THROW(zeldovich_species_count(137.0, -1.0, c), DomainError);
}
