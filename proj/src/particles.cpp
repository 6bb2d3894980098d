// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/particles.hpp"

#include "qvac/errors.hpp"
#include "qvac/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

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

template<class T>
bool parse_number(std::string_view text, T& out)
{
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

void validate(const Particle& p, const std::string& where)
{
    if (p.name.empty())
        throw ValidationError(where + "empty particle name");
    if (p.name.find_first_of(",#\n") != std::string::npos)
        throw ValidationError(where + "particle name '" + p.name
                              + "' contains a reserved character");
    if (!(std::isfinite(p.mass_gev) && p.mass_gev > 0))
        throw ValidationError(where + "non-positive mass for '" + p.name + "'");
    if (p.multiplicity < 1)
        throw ValidationError(where + "multiplicity < 1 for '" + p.name + "'");
}

Particle parse_row(std::string_view line, int lineno)
{
    const std::string where = "line " + std::to_string(lineno) + ": ";
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cols.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (cols.size() != 5)
        throw ValidationError(where + "expected 5 columns, found "
                              + std::to_string(cols.size()));

    Particle p;
    p.name = std::string(cols[0]);
    try {
        p.charge_over_e = parse_rational(cols[1]);
    } catch (const ValidationError& e) {
        throw ValidationError(where + e.what());
    }
    if (!parse_number(cols[2], p.mass_gev))
        throw ValidationError(where + "bad mass '" + std::string(cols[2]) + "'");
    if (!parse_number(cols[3], p.multiplicity))
        throw ValidationError(where + "bad multiplicity '" + std::string(cols[3])
                              + "'");
    const auto kind = parse_particle_kind(cols[4]);
    if (!kind)
        throw ValidationError(where + "unknown kind '" + std::string(cols[4]) + "'");
    p.kind = *kind;
    validate(p, where);
    return p;
}

} // namespace

std::string_view to_string(ParticleKind kind) noexcept
{
    switch (kind) {
    case ParticleKind::lepton: return "lepton";
    case ParticleKind::quark: return "quark";
    case ParticleKind::boson: return "boson";
    case ParticleKind::custom: return "custom";
    }
    return "custom";
}

std::optional<ParticleKind> parse_particle_kind(std::string_view text) noexcept
{
    for (auto k : {ParticleKind::lepton, ParticleKind::quark, ParticleKind::boson,
                   ParticleKind::custom})
        if (text == to_string(k))
            return k;
    return std::nullopt;
}

Rational Particle::weight() const
{
    return Rational(multiplicity) * charge_over_e * charge_over_e;
}

double Particle::log_mass() const
{
    return std::log(mass_gev);
}

bool operator==(const Particle& a, const Particle& b)
{
    return a.name == b.name && a.charge_over_e == b.charge_over_e
           && a.mass_gev == b.mass_gev && a.multiplicity == b.multiplicity
           && a.kind == b.kind;
}

ParticleSet::ParticleSet(std::vector<Particle> particles)
    : particles_(std::move(particles))
{
    std::unordered_set<std::string_view> names;
    for (std::size_t i = 0; i < particles_.size(); ++i) {
        const auto& p = particles_[i];
        const std::string where = "row " + std::to_string(i + 1) + ": ";
        validate(p, where);
        if (!names.insert(p.name).second)
            throw ValidationError(where + "duplicate name '" + p.name + "'");
        weight_ += p.weight();
    }
}

std::int64_t ParticleSet::expanded_count() const noexcept
{
    std::int64_t n = 0;
    for (const auto& p : particles_)
        n += p.multiplicity;
    return n;
}

const Particle* ParticleSet::find(std::string_view name) const noexcept
{
    for (const auto& p : particles_)
        if (p.name == name)
            return &p;
    return nullptr;
}

ParticleSet builtin_standard_model()
{
    // PDG 2022; quark masses are current masses. Mirrors
    // data/standard_model.csv.
    const auto q = [](std::string name, int num, int den, double mass, int mult,
                      ParticleKind kind) {
        return Particle{std::move(name), Rational(num, den), mass, mult, kind};
    };
    using K = ParticleKind;
    return ParticleSet({
        q("electron", -1, 1, electron_mass_gev, 1, K::lepton),
        q("muon", -1, 1, 0.1056583755, 1, K::lepton),
        q("tauon", -1, 1, 1.77686, 1, K::lepton),
        q("up", 2, 3, 0.00216, 3, K::quark),
        q("down", -1, 3, 0.00467, 3, K::quark),
        q("strange", -1, 3, 0.0934, 3, K::quark),
        q("charm", 2, 3, 1.27, 3, K::quark),
        q("bottom", -1, 3, 4.18, 3, K::quark),
        q("top", 2, 3, 172.69, 3, K::quark),
        q("W+", 1, 1, 80.377, 1, K::boson),
    });
}

ParticleSet load_particles(std::istream& in)
{
    std::vector<Particle> rows;
    std::unordered_set<std::string> names;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        view = trim(view.substr(0, view.find('#')));
        if (view.empty())
            continue;
        auto p = parse_row(view, lineno);
        if (!names.insert(p.name).second)
            throw ValidationError("line " + std::to_string(lineno)
                                  + ": duplicate name '" + p.name + "'");
        rows.push_back(std::move(p));
    }
    return ParticleSet(std::move(rows));
}

ParticleSet load_particles_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open particle table " + path.string());
    return load_particles(in);
}

void write_particles(std::ostream& out, const ParticleSet& set)
{
    out << "# name, charge_over_e, mass_GeV, multiplicity, kind\n";
    for (const auto& p : set.particles())
        out << p.name << ", " << to_string(p.charge_over_e) << ", "
            << format_shortest(p.mass_gev) << ", " << p.multiplicity << ", "
            << to_string(p.kind) << '\n';
}

Rational charge_weight_sum(const ParticleSet& set)
{
    return set.weight();
}

std::string fingerprint(const ParticleSet& set)
{
    std::ostringstream os;
    write_particles(os, set);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace qvac
