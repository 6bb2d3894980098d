// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/report.hpp"

#include "qvac/errors.hpp"
#include "qvac/format.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

namespace qvac {
namespace {

std::string_view mode_name(ThresholdMode mode)
{
    return mode == ThresholdMode::asymptotic_all ? "all" : "decouple";
}

nlohmann::ordered_json number_or_null(double v)
{
    if (std::isfinite(v))
        return v;
    return nullptr;
}

void write_table(std::ostream& out, const SummaryReport& r)
{
    const auto line = [&out](std::string_view label, const std::string& value) {
        out << "  " << std::left << std::setw(34) << label << value << '\n';
    };

    out << "particle set: " << r.set_name << " (" << r.rows.size() << " rows, "
        << r.expanded_count << " entries, W = " << r.charge_weight << ")\n";
    out << "cutoff: " << (r.cutoff_is_planck ? "Planck mass " : "")
        << format_sci_from_log(r.log_cutoff_gev) << " GeV\n\n";

    out << "  " << std::left << std::setw(10) << "name" << std::right
        << std::setw(8) << "q/e" << std::setw(20) << "mass [GeV]"
        << std::setw(6) << "mult" << std::setw(8) << "weight" << std::setw(20)
        << "ln(L^2/m^2)" << '\n';
    for (const auto& row : r.rows) {
        out << "  " << std::left << std::setw(10) << row.name << std::right
            << std::setw(8) << row.charge << std::setw(20)
            << format_sig12(row.mass_gev) << std::setw(6) << row.multiplicity
            << std::setw(8) << row.weight << std::setw(20)
            << format_sig12(row.log_term) << (row.negative ? "  (above cutoff)" : "")
            << '\n';
    }
    out << '\n';
    line("log term max (" + r.log_max_name + ")", format_sig12(r.log_max));
    line("log term min (" + r.log_min_name + ")", format_sig12(r.log_min));
    line("log term spread [%]", format_sig12(100 * r.log_spread));
    line("f (charge-squared)", format_sig12(r.f_charge_squared));
    line("f (uniform)", format_sig12(r.f_uniform));
    line("1/alpha model 4 pi f W", format_sig12(r.alpha_inverse_model));
    line("1/alpha(0) at cutoff", format_sig12(r.alpha_inverse_zero));
    line("identity relative error", format_sig12(r.identity_relative_error));
    line("1/alpha measured", format_sig12(r.alpha_inverse_measured));
    line("epsilon0 model [F/m]", format_sig12(r.vacuum.epsilon0_model));
    line("epsilon0 measured [F/m]", format_sig12(r.epsilon0_measured));
    line("epsilon0 model / measured", format_sig12(r.vacuum.epsilon0_ratio_to_measured));
    line("Landau pole ln(L/GeV)", format_sig12(r.landau.log_cutoff_gev));
    line("Landau pole [GeV]", format_sci_from_log(r.landau.log_cutoff_gev));
    line("Zel'dovich species count", format_sig12(r.zeldovich_nu));
}

void write_csv(std::ostream& out, const SummaryReport& r)
{
    const auto kv = [&out](std::string_view key, const std::string& value) {
        out << key << ',' << value << '\n';
    };
    out << "quantity,value\n";
    kv("particle_set", r.set_name);
    kv("charge_weight", r.charge_weight);
    kv("expanded_count", std::to_string(r.expanded_count));
    kv("cutoff_is_planck", r.cutoff_is_planck ? "true" : "false");
    kv("log_cutoff_gev", format_sig12(r.log_cutoff_gev));
    kv("cutoff_mass_gev", format_sci_from_log(r.log_cutoff_gev));
    for (const auto& row : r.rows)
        kv("log_term:" + row.name, format_sig12(row.log_term));
    kv("log_max_name", r.log_max_name);
    kv("log_max", format_sig12(r.log_max));
    kv("log_min_name", r.log_min_name);
    kv("log_min", format_sig12(r.log_min));
    kv("log_spread", format_sig12(r.log_spread));
    kv("f_charge_squared", format_sig12(r.f_charge_squared));
    kv("f_uniform", format_sig12(r.f_uniform));
    kv("alpha_inverse_model", format_sig12(r.alpha_inverse_model));
    kv("alpha_inverse_zero", format_sig12(r.alpha_inverse_zero));
    kv("identity_relative_error", format_sig12(r.identity_relative_error));
    kv("alpha_inverse_measured", format_sig12(r.alpha_inverse_measured));
    kv("epsilon0_model_si", format_sig12(r.vacuum.epsilon0_model));
    kv("epsilon0_measured_si", format_sig12(r.epsilon0_measured));
    kv("epsilon0_ratio", format_sig12(r.vacuum.epsilon0_ratio_to_measured));
    kv("landau_log_cutoff_gev", format_sig12(r.landau.log_cutoff_gev));
    kv("landau_cutoff_gev", format_sci_from_log(r.landau.log_cutoff_gev));
    kv("zeldovich_mass_gev", format_sig12(r.zeldovich_mass_gev));
    kv("zeldovich_nu", format_sig12(r.zeldovich_nu));
}

void write_json(std::ostream& out, const SummaryReport& r)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["particle_set"] = r.set_name;
    j["charge_weight"] = r.charge_weight;
    j["expanded_count"] = r.expanded_count;
    j["cutoff"] = {
        {"planck", r.cutoff_is_planck},
        {"mass_gev", number_or_null(r.cutoff_mass_gev)},
        {"log_mass_gev", r.log_cutoff_gev},
    };
    auto rows = ordered_json::array();
    for (const auto& row : r.rows)
        rows.push_back({
            {"name", row.name},
            {"charge_over_e", row.charge},
            {"mass_gev", row.mass_gev},
            {"multiplicity", row.multiplicity},
            {"weight", row.weight},
            {"log_term", row.log_term},
            {"above_cutoff", row.negative},
        });
    j["particles"] = std::move(rows);
    j["log_terms"] = {
        {"max", {{"name", r.log_max_name}, {"value", r.log_max}}},
        {"min", {{"name", r.log_min_name}, {"value", r.log_min}}},
        {"spread", r.log_spread},
    };
    j["f"] = {{"charge_squared", r.f_charge_squared}, {"uniform", r.f_uniform}};
    j["alpha_inverse"] = {
        {"model", r.alpha_inverse_model},
        {"zero", r.alpha_inverse_zero},
        {"identity_relative_error", r.identity_relative_error},
        {"measured", r.alpha_inverse_measured},
    };
    j["epsilon0"] = {
        {"model_si", r.vacuum.epsilon0_model},
        {"measured_si", r.epsilon0_measured},
        {"ratio", r.vacuum.epsilon0_ratio_to_measured},
    };
    j["landau_pole"] = {
        {"log_cutoff_gev", r.landau.log_cutoff_gev},
        {"cutoff_gev", format_sci_from_log(r.landau.log_cutoff_gev)},
        {"residual", r.landau.residual},
    };
    j["zeldovich"] = {{"mass_gev", r.zeldovich_mass_gev}, {"nu", r.zeldovich_nu}};
    out << j.dump(2) << '\n';
}

} // namespace

void SweepSpec::validate() const
{
    if (!(std::isfinite(k2_min) && std::isfinite(k2_max) && 0 < k2_min
          && k2_min < k2_max))
        throw DomainError("sweep needs 0 < k2_min < k2_max");
    if (points < 2)
        throw DomainError("sweep needs at least 2 points");
}

SweepTable run_sweep(const SweepSpec& spec,
                     const ParticleSet& set,
                     double alpha0_inverse,
                     ThresholdMode mode,
                     std::string set_name)
{
    spec.validate();
    SweepTable table;
    table.set_name = std::move(set_name);
    table.set_fingerprint = fingerprint(set);
    table.mode = mode;
    table.alpha0_inverse = alpha0_inverse;

    const double log_min = std::log(spec.k2_min);
    const double log_max = std::log(spec.k2_max);
    const auto last = spec.points - 1;
    table.rows.reserve(static_cast<std::size_t>(spec.points));
    for (std::int64_t i = 0; i < spec.points; ++i) {
        double k2 = spec.k2_min;
        if (i == last)
            k2 = spec.k2_max;
        else if (i > 0)
            k2 = std::exp(log_min
                          + static_cast<double>(i) * (log_max - log_min)
                                / static_cast<double>(last));
        table.rows.push_back(alpha_inverse_running(
            OffShellness(k2, false), set, alpha0_inverse, mode));
    }
    return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table)
{
    out << "# particles=" << table.set_name
        << " fingerprint=" << table.set_fingerprint
        << " mode=" << mode_name(table.mode)
        << " alpha0_inverse=" << format_shortest(table.alpha0_inverse) << '\n';
    out << "k2_abs_gev2,alpha_inverse,included_weight\n";
    for (const auto& row : table.rows)
        out << format_sig12(row.k2_abs) << ',' << format_sig12(row.alpha_inverse)
            << ',' << to_string(row.included_weight) << '\n';
}

SummaryReport summary_report(const ParticleSet& set,
                         const Cutoff& cutoff,
                         const PhysicalConstants& constants,
                         std::string set_name)
{
    if (set.empty() || set.weight() == 0)
        throw DomainError("report needs at least one charged particle");

    SummaryReport r;
    r.set_name = std::move(set_name);
    r.cutoff_mass_gev = resolve_cutoff(cutoff, constants);
    r.log_cutoff_gev = resolve_log_cutoff(cutoff, constants);
    r.cutoff_is_planck = cutoff.is_planck();
    r.charge_weight = to_string(set.weight());
    r.expanded_count = set.expanded_count();

    const auto charge2 = fudge_factor(set, cutoff, constants, Weighting::charge_squared);
    const auto uniform = fudge_factor(set, cutoff, constants, Weighting::uniform);

    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& p = set.particles()[i];
        const auto& entry = charge2.per_particle_logs[i];
        r.rows.push_back({p.name, to_string(p.charge_over_e), p.mass_gev,
                          p.multiplicity, to_string(p.weight()), entry.log_term,
                          entry.negative});
        if (i == 0 || entry.log_term > r.log_max) {
            r.log_max = entry.log_term;
            r.log_max_name = p.name;
        }
        if (i == 0 || entry.log_term < r.log_min) {
            r.log_min = entry.log_term;
            r.log_min_name = p.name;
        }
    }
    r.log_spread = (r.log_max - r.log_min) / r.log_max;

    r.f_charge_squared = charge2.f;
    r.f_uniform = uniform.f;
    r.alpha_inverse_model = alpha_inverse_model(set, charge2.f);
    r.alpha_inverse_zero = alpha_inverse_zero(set, cutoff, constants);
    r.identity_relative_error = std::abs(r.alpha_inverse_zero - r.alpha_inverse_model)
                                / std::abs(r.alpha_inverse_zero);
    if (!(r.identity_relative_error <= report_identity_tolerance))
        throw DomainError("identity check failed: 4 pi f W = "
                          + format_shortest(r.alpha_inverse_model)
                          + " but 1/alpha(0) = "
                          + format_shortest(r.alpha_inverse_zero));
    r.alpha_inverse_measured = constants.alpha_inverse_measured();

    r.vacuum = epsilon0_model(set, charge2.f, constants);
    r.epsilon0_measured = constants.epsilon0_si();

    r.landau = landau_pole(set, constants.alpha_inverse_measured());
    const auto* electron = set.find("electron");
    r.zeldovich_mass_gev = electron ? electron->mass_gev : electron_mass_gev;
    r.zeldovich_nu = zeldovich_species_count(constants.alpha_inverse_measured(),
                                             r.zeldovich_mass_gev, constants);
    return r;
}

void write_report(std::ostream& out, const SummaryReport& report, ReportFormat format)
{
    switch (format) {
    case ReportFormat::table: write_table(out, report); break;
    case ReportFormat::csv: write_csv(out, report); break;
    case ReportFormat::json: write_json(out, report); break;
    }
}

} // namespace qvac
