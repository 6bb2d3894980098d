// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
//
// qvac command-line front end. Talks to the library only through qvac.h.
//
// Exit codes: 0 success, 1 usage error, 2 validation error (particle table
// or constants file), 3 numeric/domain error.

#include "qvac/qvac.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int exit_usage = 1;
constexpr int exit_validation = 2;
constexpr int exit_domain = 3;

struct Failure
{
    int code;
    std::string message;
};

int exit_code_for(qvac_status status)
{
    switch (status) {
    case QVAC_OK: return 0;
    case QVAC_ERR_INVALID_ARGUMENT: return exit_usage;
    case QVAC_ERR_VALIDATION:
    case QVAC_ERR_IO: return exit_validation;
    case QVAC_ERR_DOMAIN:
    case QVAC_ERR_INTERNAL: return exit_domain;
    }
    return exit_domain;
}

void check(qvac_status status)
{
    if (status != QVAC_OK)
        throw Failure{exit_code_for(status), qvac_last_error()};
}

struct StringDeleter
{
    void operator()(char* s) const { qvac_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct SetDeleter
{
    void operator()(qvac_particle_set* s) const { qvac_particles_free(s); }
};
struct ConstantsDeleter
{
    void operator()(qvac_constants* c) const { qvac_constants_free(c); }
};

std::string sig12(double v)
{
    char* out = nullptr;
    check(qvac_format_sig12(v, &out));
    return OwnedString(out).get();
}

std::string sci_from_log(double v)
{
    char* out = nullptr;
    check(qvac_format_sci_from_log(v, &out));
    return OwnedString(out).get();
}

void print(std::string_view key, const std::string& value)
{
    std::cout << key << " = " << value << '\n';
}

std::string rational(int64_t num, int64_t den)
{
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
}

struct Options
{
    std::string particles_file;
    std::string constants_file;
    std::string cutoff = "planck";
    std::string weighting = "charge2";
    std::string mode = "decouple";
    std::optional<double> alpha0;
    std::string format = "table";
};

class Session
{
  public:
    explicit Session(const Options& opts)
    {
        qvac_particle_set* set = nullptr;
        if (opts.particles_file.empty()) {
            check(qvac_particles_builtin(&set));
            set_name_ = "builtin-sm";
        } else {
            check(qvac_particles_load_file(opts.particles_file.c_str(), &set));
            set_name_ = opts.particles_file;
        }
        set_.reset(set);

        qvac_constants* c = nullptr;
        if (opts.constants_file.empty())
            check(qvac_constants_standard(&c));
        else
            check(qvac_constants_load_file(opts.constants_file.c_str(), &c));
        constants_.reset(c);
    }

    const qvac_particle_set* set() const { return set_.get(); }
    const qvac_constants* constants() const { return constants_.get(); }
    const std::string& set_name() const { return set_name_; }

    double alpha0_or_measured(const std::optional<double>& alpha0) const
    {
        if (alpha0)
            return *alpha0;
        double v = 0;
        check(qvac_constants_alpha_inverse_measured(constants(), &v));
        return v;
    }

  private:
    std::unique_ptr<qvac_particle_set, SetDeleter> set_;
    std::unique_ptr<qvac_constants, ConstantsDeleter> constants_;
    std::string set_name_;
};

qvac_cutoff parse_cutoff(const std::string& text)
{
    if (text == "planck")
        return {QVAC_CUTOFF_PLANCK, 0.0};
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !(v > 0))
        throw Failure{exit_usage, "--cutoff must be 'planck' or a positive mass in GeV"};
    return {QVAC_CUTOFF_MASS, v};
}

qvac_weighting parse_weighting(const std::string& text)
{
    return text == "uniform" ? QVAC_WEIGHTING_UNIFORM : QVAC_WEIGHTING_CHARGE_SQUARED;
}

qvac_threshold_mode parse_mode(const std::string& text)
{
    return text == "all" ? QVAC_MODE_ALL : QVAC_MODE_DECOUPLE;
}

void cmd_particles(const Session& s, const std::string& action)
{
    size_t rows = 0;
    int64_t expanded = 0;
    check(qvac_particles_count(s.set(), &rows, &expanded));
    int64_t num = 0, den = 1;
    check(qvac_particles_weight(s.set(), &num, &den));

    if (action == "validate") {
        std::cout << "ok: " << s.set_name() << ": " << rows << " rows, " << expanded
                  << " entries, W = " << rational(num, den) << '\n';
        return;
    }
    std::printf("%-10s %8s %20s %5s %-7s\n", "name", "q/e", "mass_gev", "mult", "kind");
    for (size_t i = 0; i < rows; ++i) {
        qvac_particle_info p{};
        check(qvac_particles_get(s.set(), i, &p));
        std::printf("%-10s %8s %20s %5lld %-7s\n", p.name,
                    rational(p.charge_num, p.charge_den).c_str(),
                    sig12(p.mass_gev).c_str(), static_cast<long long>(p.multiplicity),
                    p.kind);
    }
    std::cout << "# " << rows << " rows, " << expanded
              << " entries, W = " << rational(num, den) << '\n';
}

void cmd_alpha0(const Session& s, const Options& o)
{
    const auto cutoff = parse_cutoff(o.cutoff);
    double cutoff_mass = 0, log_cutoff = 0;
    check(qvac_resolve_cutoff(cutoff, s.constants(), &cutoff_mass, &log_cutoff));
    double a0 = 0, f = 0, model = 0;
    check(qvac_alpha_inverse_zero(s.set(), cutoff, s.constants(), &a0));
    check(qvac_fudge_factor(s.set(), cutoff, s.constants(), parse_weighting(o.weighting),
                            &f, nullptr));
    check(qvac_alpha_inverse_model(s.set(), f, &model));
    print("cutoff_gev", sci_from_log(log_cutoff));
    print("alpha_inverse_zero", sig12(a0));
    print("f", sig12(f));
    print("weighting", o.weighting);
    print("alpha_inverse_model", sig12(model));
}

void cmd_running(const Session& s, const Options& o, double k2)
{
    qvac_running_point p{};
    const double a0 = s.alpha0_or_measured(o.alpha0);
    check(qvac_alpha_inverse_running(s.set(), k2, a0, parse_mode(o.mode), &p));
    print("k2_abs_gev2", sig12(p.k2_abs));
    print("timelike", k2 > 0 ? "true" : "false");
    print("mode", o.mode);
    print("alpha0_inverse", sig12(a0));
    print("alpha_inverse", sig12(p.alpha_inverse));
    print("included_weight", rational(p.included_weight_num, p.included_weight_den));
}

void cmd_sweep(const Session& s, const Options& o, double k2_min, double k2_max,
               int64_t points, const std::string& out_path)
{
    char* csv = nullptr;
    check(qvac_sweep_csv(s.set(), s.set_name().c_str(), k2_min, k2_max, points,
                         s.alpha0_or_measured(o.alpha0), parse_mode(o.mode), &csv));
    OwnedString owned(csv);
    if (out_path == "-") {
        std::cout << owned.get();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << owned.get()))
        throw Failure{exit_validation, "cannot write " + out_path};
}

void cmd_landau(const Session& s, const Options& o, bool verify)
{
    const double a0 = s.alpha0_or_measured(o.alpha0);
    qvac_landau_result pole{};
    check(qvac_landau_pole(s.set(), a0, &pole));
    print("alpha0_inverse", sig12(a0));
    print("log_cutoff_gev", sig12(pole.log_cutoff_gev));
    print("cutoff_gev", sci_from_log(pole.log_cutoff_gev));
    print("residual", sig12(pole.residual));
    if (verify) {
        qvac_landau_result bis{};
        check(qvac_landau_pole_bisection(s.set(), a0, &bis));
        print("bisection_log_cutoff_gev", sig12(bis.log_cutoff_gev));
        print("bisection_iterations", std::to_string(bis.iterations));
    }
}

void cmd_f_factor(const Session& s, const Options& o)
{
    const auto cutoff = parse_cutoff(o.cutoff);
    double cutoff_mass = 0, log_cutoff = 0;
    check(qvac_resolve_cutoff(cutoff, s.constants(), &cutoff_mass, &log_cutoff));
    double f = 0;
    int any_negative = 0;
    check(qvac_fudge_factor(s.set(), cutoff, s.constants(), parse_weighting(o.weighting),
                            &f, &any_negative));

    size_t rows = 0;
    check(qvac_particles_count(s.set(), &rows, nullptr));
    for (size_t i = 0; i < rows; ++i) {
        qvac_particle_info p{};
        check(qvac_particles_get(s.set(), i, &p));
        double term = 0;
        check(qvac_log_term(p.mass_gev, cutoff_mass, &term));
        print(std::string("log_term.") + p.name, sig12(term));
    }
    print("cutoff_gev", sci_from_log(log_cutoff));
    print("weighting", o.weighting);
    print("f", sig12(f));
    if (any_negative)
        std::cerr << "warning: some particles are heavier than the cutoff\n";
}

void cmd_epsilon0(const Session& s, const Options& o)
{
    const auto cutoff = parse_cutoff(o.cutoff);
    double f = 0;
    check(qvac_fudge_factor(s.set(), cutoff, s.constants(), parse_weighting(o.weighting),
                            &f, nullptr));
    qvac_vacuum_prediction pred{};
    check(qvac_epsilon0_model(s.set(), f, s.constants(), &pred));
    print("f", sig12(f));
    print("epsilon0_model_si", sig12(pred.epsilon0_model));
    print("epsilon0_ratio", sig12(pred.epsilon0_ratio_to_measured));
    print("alpha_inverse_model", sig12(pred.alpha_inverse_model));
}

void cmd_zeldovich(const Session& s, const Options& o, std::optional<int64_t> nu,
                   double mass, bool invert)
{
    if (invert) {
        if (!o.alpha0)
            throw Failure{exit_usage, "--invert requires --alpha0"};
        double count = 0;
        check(qvac_zeldovich_species_count(*o.alpha0, mass, s.constants(), &count));
        print("nu", sig12(count));
        return;
    }
    if (!nu)
        throw Failure{exit_usage, "zeldovich requires --nu (or --invert --alpha0)"};
    double a = 0;
    int non_positive = 0;
    check(qvac_zeldovich_alpha_inverse(*nu, mass, s.constants(), &a, &non_positive));
    print("alpha_inverse", sig12(a));
    if (non_positive)
        std::cerr << "warning: mass at or above the Planck mass\n";
}

void cmd_report(const Session& s, const Options& o)
{
    qvac_report_format fmt = QVAC_FORMAT_TABLE;
    if (o.format == "csv")
        fmt = QVAC_FORMAT_CSV;
    else if (o.format == "json")
        fmt = QVAC_FORMAT_JSON;
    char* text = nullptr;
    check(qvac_report(s.set(), s.set_name().c_str(), parse_cutoff(o.cutoff),
                      s.constants(), fmt, &text));
    std::cout << OwnedString(text).get();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fine-structure constant from the charged particle content of "
                 "the vacuum"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--particles", o.particles_file, "Particle table (default: built-in SM)")
        ->check(CLI::ExistingFile);
    app.add_option("--constants", o.constants_file, "Constants override file")
        ->check(CLI::ExistingFile);

    const auto add_cutoff = [&o](CLI::App* cmd) {
        cmd->add_option("--cutoff", o.cutoff, "planck or a mass in GeV");
    };
    const auto add_weighting = [&o](CLI::App* cmd) {
        cmd->add_option("--weighting", o.weighting)
            ->check(CLI::IsMember({"charge2", "uniform"}));
    };
    const auto add_mode = [&o](CLI::App* cmd) {
        cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"decouple", "all"}));
    };
    const auto add_alpha0 = [&o](CLI::App* cmd) {
        cmd->add_option("--alpha0", o.alpha0, "1/alpha at zero momentum (default: measured)");
    };

    std::string particles_action;
    auto* particles = app.add_subcommand("particles", "List or validate the particle table");
    particles->add_option("action", particles_action)
        ->required()
        ->check(CLI::IsMember({"list", "validate"}));

    auto* alpha0 = app.add_subcommand("alpha0", "1/alpha(0) at the cutoff and 4 pi f W");
    add_cutoff(alpha0);
    add_weighting(alpha0);

    double k2 = 0;
    auto* running = app.add_subcommand("running", "Running 1/alpha at one |k^2|");
    running->add_option("--k2", k2, "k^2 in GeV^2 (sign marks timelike/spacelike)")
        ->required();
    add_mode(running);
    add_alpha0(running);

    double k2_min = 0, k2_max = 0;
    int64_t points = 0;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "Running 1/alpha on a log grid, as CSV");
    sweep->add_option("--k2-min", k2_min)->required();
    sweep->add_option("--k2-max", k2_max)->required();
    sweep->add_option("--points", points)->required();
    sweep->add_option("--out", out_path, "Output CSV ('-' for stdout)")->required();
    add_mode(sweep);
    add_alpha0(sweep);

    bool verify = false;
    auto* landau = app.add_subcommand("landau", "Landau pole of the running coupling");
    add_alpha0(landau);
    landau->add_flag("--verify", verify, "Cross-check with bisection");

    auto* f_factor = app.add_subcommand("f-factor", "Averaged log term f");
    add_cutoff(f_factor);
    add_weighting(f_factor);

    auto* epsilon0 = app.add_subcommand("epsilon0", "Predicted vacuum permittivity");
    add_cutoff(epsilon0);
    add_weighting(epsilon0);

    std::optional<int64_t> nu;
    double mass = 0;
    bool invert = false;
    auto* zeldovich = app.add_subcommand("zeldovich", "Uniform-charge species formula");
    zeldovich->add_option("--nu", nu);
    zeldovich->add_option("--mass", mass, "Species mass in GeV")->required();
    zeldovich->add_flag("--invert", invert, "Solve for nu given --alpha0");
    add_alpha0(zeldovich);

    auto* report = app.add_subcommand("report", "Summary report");
    add_cutoff(report);
    report->add_option("--format", o.format)
        ->check(CLI::IsMember({"table", "csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        const Session session(o);
        if (*particles)
            cmd_particles(session, particles_action);
        else if (*alpha0)
            cmd_alpha0(session, o);
        else if (*running)
            cmd_running(session, o, k2);
        else if (*sweep)
            cmd_sweep(session, o, k2_min, k2_max, points, out_path);
        else if (*landau)
            cmd_landau(session, o, verify);
        else if (*f_factor)
            cmd_f_factor(session, o);
        else if (*epsilon0)
            cmd_epsilon0(session, o);
        else if (*zeldovich)
            cmd_zeldovich(session, o, nu, mass, invert);
        else if (*report)
            cmd_report(session, o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    }
    return 0;
}
