// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
//---------------------------------------------------------------------------//
//! \file particles.hpp
//! Charged particle data model and the built-in Standard-Model table.
//---------------------------------------------------------------------------//
#pragma once

#include "qvac/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qvac {

enum class ParticleKind
{
    lepton,
    quark,
    boson,
    custom,
};

std::string_view to_string(ParticleKind kind) noexcept;
std::optional<ParticleKind> parse_particle_kind(std::string_view text) noexcept;

/*!
 * One charged elementary particle type.
 *
 * Color is carried by the multiplicity (3 per quark flavor) rather than by
 * separate rows. Antiparticles are not listed.
 */
struct Particle
{
    std::string name;
    Rational charge_over_e;
    double mass_gev = 0;
    std::int64_t multiplicity = 1;
    ParticleKind kind = ParticleKind::custom;

    //! multiplicity * (q/e)^2
    Rational weight() const;
    double log_mass() const;
};

bool operator==(const Particle& a, const Particle& b);

//---------------------------------------------------------------------------//
/*!
 * Validated, ordered collection of particles.
 *
 * Names are unique, masses positive and multiplicities at least one. The
 * total charge-squared weight is accumulated exactly at construction.
 */
class ParticleSet
{
  public:
    ParticleSet() = default;
    //! Throws ValidationError on the first invalid row.
    explicit ParticleSet(std::vector<Particle> particles);

    const std::vector<Particle>& particles() const noexcept
    {
        return particles_;
    }
    std::size_t size() const noexcept { return particles_.size(); }
    bool empty() const noexcept { return particles_.empty(); }

    //! Sum of multiplicities over all rows.
    std::int64_t expanded_count() const noexcept;
    //! Exact total weight W = sum of multiplicity * (q/e)^2.
    const Rational& weight() const noexcept { return weight_; }

    const Particle* find(std::string_view name) const noexcept;

    friend bool operator==(const ParticleSet&, const ParticleSet&) = default;

  private:
    std::vector<Particle> particles_;
    Rational weight_{0};
};

//! Electron, muon, tauon, six quark flavors (x3 colors) and the W boson.
ParticleSet builtin_standard_model();

//! Electron mass of the built-in snapshot, GeV.
inline constexpr double electron_mass_gev = 0.00051099895;

//! Parses the comma-separated table format
//! `name, charge_over_e, mass_GeV, multiplicity, kind`. Throws
//! ValidationError naming the offending line.
ParticleSet load_particles(std::istream& in);
ParticleSet load_particles_file(const std::filesystem::path& path);

//! Writes a table that load_particles reads back to an identical set.
void write_particles(std::ostream& out, const ParticleSet& set);

Rational charge_weight_sum(const ParticleSet& set);

//! FNV-1a hash of the serialized table, as 16 hex digits.
std::string fingerprint(const ParticleSet& set);

} // namespace qvac
