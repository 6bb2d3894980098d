// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
//
// Exercises the shared library through qvac.h only.
#include "qvac/qvac.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

namespace {

struct SetHandle
{
    qvac_particle_set* p = nullptr;
    ~SetHandle() { qvac_particles_free(p); }
};

struct ConstantsHandle
{
    qvac_constants* p = nullptr;
    ~ConstantsHandle() { qvac_constants_free(p); }
};

std::string take(char* s)
{
    std::string out = s ? s : "";
    qvac_string_free(s);
    return out;
}

constexpr qvac_cutoff planck{QVAC_CUTOFF_PLANCK, 0.0};

} // namespace

TEST(CApi, BuiltinSetAccessors)
{
    SetHandle set;
    ASSERT_EQ(qvac_particles_builtin(&set.p), QVAC_OK);
    size_t rows = 0;
    int64_t expanded = 0;
    ASSERT_EQ(qvac_particles_count(set.p, &rows, &expanded), QVAC_OK);
    EXPECT_EQ(rows, 10u);
    EXPECT_EQ(expanded, 22);
    int64_t num = 0, den = 0;
    ASSERT_EQ(qvac_particles_weight(set.p, &num, &den), QVAC_OK);
    EXPECT_EQ(num, 9);
    EXPECT_EQ(den, 1);

    qvac_particle_info info{};
    ASSERT_EQ(qvac_particles_get(set.p, 3, &info), QVAC_OK);
    EXPECT_STREQ(info.name, "up");
    EXPECT_STREQ(info.kind, "quark");
    EXPECT_EQ(info.charge_num, 2);
    EXPECT_EQ(info.charge_den, 3);
    EXPECT_EQ(info.mass_gev, 0.00216);
    EXPECT_EQ(info.multiplicity, 3);
    EXPECT_EQ(qvac_particles_get(set.p, 10, &info), QVAC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ParseSerializeRoundTrip)
{
    SetHandle a, b;
    ASSERT_EQ(qvac_particles_builtin(&a.p), QVAC_OK);
    char* text = nullptr;
    ASSERT_EQ(qvac_particles_serialize(a.p, &text), QVAC_OK);
    const auto table = take(text);
    ASSERT_EQ(qvac_particles_parse(table.c_str(), &b.p), QVAC_OK);
    char* fa = nullptr;
    char* fb = nullptr;
    ASSERT_EQ(qvac_particles_fingerprint(a.p, &fa), QVAC_OK);
    ASSERT_EQ(qvac_particles_fingerprint(b.p, &fb), QVAC_OK);
    EXPECT_EQ(take(fa), take(fb));
}

TEST(CApi, ValidationErrorCarriesMessage)
{
    SetHandle set;
    EXPECT_EQ(qvac_particles_parse("ok, 1, 1, 1, lepton\nbad, 1, -1, 1, lepton\n", &set.p),
              QVAC_ERR_VALIDATION);
    EXPECT_EQ(set.p, nullptr);
    const std::string msg = qvac_last_error();
    EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
    EXPECT_EQ(qvac_particles_load_file("/nonexistent.csv", &set.p), QVAC_ERR_IO);
}

TEST(CApi, NullArguments)
{
    EXPECT_EQ(qvac_particles_builtin(nullptr), QVAC_ERR_INVALID_ARGUMENT);
    double out = 0;
    EXPECT_EQ(qvac_alpha_inverse_zero(nullptr, planck, nullptr, &out),
              QVAC_ERR_INVALID_ARGUMENT);
    qvac_particles_free(nullptr);
    qvac_constants_free(nullptr);
    qvac_string_free(nullptr);
}

TEST(CApi, ConstantsAndCutoff)
{
    ConstantsHandle c;
    ASSERT_EQ(qvac_constants_standard(&c.p), QVAC_OK);
    double mp = 0;
    ASSERT_EQ(qvac_planck_mass(c.p, &mp), QVAC_OK);
    EXPECT_NEAR(mp, 1.2209e19, 1e15);
    double mass = 0, log_mass = 0;
    ASSERT_EQ(qvac_resolve_cutoff({QVAC_CUTOFF_MASS, 1000.0}, c.p, &mass, &log_mass), QVAC_OK);
    EXPECT_EQ(mass, 1000.0);
    EXPECT_EQ(qvac_resolve_cutoff({QVAC_CUTOFF_MASS, 0.0}, c.p, &mass, nullptr),
              QVAC_ERR_DOMAIN);
    ASSERT_EQ(qvac_resolve_cutoff({QVAC_CUTOFF_LOG_MASS, 3000.0}, c.p, &mass, &log_mass),
              QVAC_OK);
    EXPECT_TRUE(std::isinf(mass));
    EXPECT_EQ(log_mass, 3000.0);

    ConstantsHandle custom;
    ASSERT_EQ(qvac_constants_parse("alpha_inverse_measured = 128\n", &custom.p), QVAC_OK);
    double a = 0;
    ASSERT_EQ(qvac_constants_alpha_inverse_measured(custom.p, &a), QVAC_OK);
    EXPECT_EQ(a, 128.0);
    ConstantsHandle bad;
    EXPECT_EQ(qvac_constants_parse("nonsense = 1\n", &bad.p), QVAC_ERR_VALIDATION);
}

TEST(CApi, ModelAndRunning)
{
    SetHandle set;
    ConstantsHandle c;
    ASSERT_EQ(qvac_particles_builtin(&set.p), QVAC_OK);
    ASSERT_EQ(qvac_constants_standard(&c.p), QVAC_OK);

    double f = 0, zero = 0, model = 0;
    int negative = -1;
    ASSERT_EQ(qvac_fudge_factor(set.p, planck, c.p, QVAC_WEIGHTING_CHARGE_SQUARED, &f,
                                &negative),
              QVAC_OK);
    EXPECT_EQ(negative, 0);
    ASSERT_EQ(qvac_alpha_inverse_zero(set.p, planck, c.p, &zero), QVAC_OK);
    ASSERT_EQ(qvac_alpha_inverse_model(set.p, f, &model), QVAC_OK);
    EXPECT_LE(std::abs(model - zero) / zero, 1e-12);
    EXPECT_EQ(qvac_fudge_factor(set.p, planck, c.p, static_cast<qvac_weighting>(9), &f,
                                nullptr),
              QVAC_ERR_INVALID_ARGUMENT);

    qvac_vacuum_prediction pred{};
    ASSERT_EQ(qvac_epsilon0_model(set.p, f, c.p, &pred), QVAC_OK);
    EXPECT_GT(pred.epsilon0_ratio_to_measured, 0.5);
    EXPECT_EQ(qvac_epsilon0_model(set.p, -1.0, c.p, &pred), QVAC_ERR_DOMAIN);

    qvac_running_point p{};
    ASSERT_EQ(qvac_alpha_inverse_running(set.p, -91.19 * 91.19, 137.036, QVAC_MODE_DECOUPLE,
                                         &p),
              QVAC_OK);
    EXPECT_EQ(p.k2_abs, 91.19 * 91.19);
    EXPECT_EQ(p.included_weight_num, 23);
    EXPECT_EQ(p.included_weight_den, 3);
    EXPECT_EQ(qvac_alpha_inverse_running(set.p, 0.0, 137.036, QVAC_MODE_ALL, &p),
              QVAC_ERR_DOMAIN);

    double term = 0;
    ASSERT_EQ(qvac_log_term(2.0, 2.0, &term), QVAC_OK);
    EXPECT_EQ(term, 0.0);
    EXPECT_EQ(qvac_log_term(0.0, 2.0, &term), QVAC_ERR_DOMAIN);
}

TEST(CApi, LandauAndZeldovich)
{
    SetHandle set, third;
    ConstantsHandle c;
    ASSERT_EQ(qvac_particles_builtin(&set.p), QVAC_OK);
    ASSERT_EQ(qvac_constants_standard(&c.p), QVAC_OK);
    qvac_landau_result pole{}, bis{};
    ASSERT_EQ(qvac_landau_pole(set.p, 137.036, &pole), QVAC_OK);
    ASSERT_EQ(qvac_landau_pole_bisection(set.p, 137.036, &bis), QVAC_OK);
    EXPECT_NEAR(bis.log_cutoff_gev, pole.log_cutoff_gev, 1e-10);
    EXPECT_EQ(pole.iterations, 0);

    ASSERT_EQ(qvac_particles_parse("q, 1/3, 1, 1, custom\n", &third.p), QVAC_OK);
    ASSERT_EQ(qvac_landau_pole(third.p, 137.036, &pole), QVAC_OK);
    EXPECT_TRUE(std::isinf(pole.cutoff_mass_gev));
    double back = 0;
    ASSERT_EQ(qvac_alpha_inverse_zero(third.p, {QVAC_CUTOFF_LOG_MASS, pole.log_cutoff_gev},
                                      c.p, &back),
              QVAC_OK);
    EXPECT_LE(std::abs(back - 137.036) / 137.036, 1e-9);

    double a = 0, nu = 0;
    int flag = -1;
    ASSERT_EQ(qvac_zeldovich_alpha_inverse(3, 80.377, c.p, &a, &flag), QVAC_OK);
    EXPECT_EQ(flag, 0);
    ASSERT_EQ(qvac_zeldovich_species_count(a, 80.377, c.p, &nu), QVAC_OK);
    EXPECT_NEAR(nu, 3.0, 1e-12);
    EXPECT_EQ(qvac_zeldovich_alpha_inverse(0, 1.0, c.p, &a, nullptr), QVAC_ERR_DOMAIN);
    EXPECT_EQ(qvac_zeldovich_species_count(137.0, 1e30, c.p, &nu), QVAC_ERR_DOMAIN);
}

TEST(CApi, SweepAndReport)
{
    SetHandle set;
    ConstantsHandle c;
    ASSERT_EQ(qvac_particles_builtin(&set.p), QVAC_OK);
    ASSERT_EQ(qvac_constants_standard(&c.p), QVAC_OK);

    char* out = nullptr;
    ASSERT_EQ(qvac_sweep_csv(set.p, "sm", 1.0, 1e4, 5, 137.036, QVAC_MODE_ALL, &out), QVAC_OK);
    const auto csv = take(out);
    EXPECT_NE(csv.find("k2_abs_gev2,alpha_inverse,included_weight\n1,"), std::string::npos);
    EXPECT_EQ(qvac_sweep_csv(set.p, nullptr, 1.0, 1e4, 1, 137.036, QVAC_MODE_ALL, &out),
              QVAC_ERR_DOMAIN);

    for (auto fmt : {QVAC_FORMAT_TABLE, QVAC_FORMAT_CSV, QVAC_FORMAT_JSON}) {
        ASSERT_EQ(qvac_report(set.p, "sm", planck, c.p, fmt, &out), QVAC_OK);
        EXPECT_FALSE(take(out).empty());
    }
    EXPECT_EQ(qvac_report(set.p, "sm", planck, c.p, static_cast<qvac_report_format>(7), &out),
              QVAC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, LastErrorIsPerThread)
{
    SetHandle set;
    ASSERT_EQ(qvac_particles_parse("a, 1, 1, 1, nope\n", &set.p), QVAC_ERR_VALIDATION);
    const std::string here = qvac_last_error();
    std::string there;
    std::thread t([&] {
        qvac_particle_set* s = nullptr;
        qvac_particles_parse("a, 1, -1, 1, lepton\n", &s);
        there = qvac_last_error();
    });
    t.join();
    EXPECT_EQ(qvac_last_error(), here);
    EXPECT_NE(there, here);
}

TEST(CApi, Formatting)
{
    char* out = nullptr;
    ASSERT_EQ(qvac_format_sig12(1.0 / 3, &out), QVAC_OK);
    EXPECT_EQ(take(out), "0.333333333333");
    ASSERT_EQ(qvac_format_sci_from_log(std::log(2.5) + 400 * std::log(10.0), &out), QVAC_OK);
    EXPECT_EQ(take(out), "2.50000000000e+400");
    ASSERT_EQ(qvac_format_sci_from_log(std::log(9.9999999999999) + 10 * std::log(10.0), &out),
              QVAC_OK);
    EXPECT_EQ(take(out), "1.00000000000e+11");
    EXPECT_STREQ(qvac_version(), "1.0.0");
}
