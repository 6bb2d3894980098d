// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

namespace qvac {

std::string format_sig12(double value)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(
        buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    return std::string(buf.data(), end);
}

std::string format_shortest(double value)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

std::string format_sci_from_log(double log_value)
{
    if (!std::isfinite(log_value))
        return format_shortest(std::exp(log_value));
    const double log10_value = log_value / std::numbers::ln10;
    auto exponent = static_cast<long long>(std::floor(log10_value));
    double mantissa = std::pow(10.0, log10_value - static_cast<double>(exponent));
    // Rounding to 12 digits can carry the mantissa up to 10.
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), mantissa,
                                   std::chars_format::fixed, 11);
    std::string digits(buf.data(), end);
    if (digits.starts_with("10.")) {
        ++exponent;
        mantissa /= 10.0;
        auto [e2, ec2] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       mantissa, std::chars_format::fixed, 11);
        digits.assign(buf.data(), e2);
    }
    std::string out = digits + (exponent < 0 ? "e-" : "e+");
    const auto abs_exp = exponent < 0 ? -exponent : exponent;
    if (abs_exp < 10)
        out += '0';
    out += std::to_string(abs_exp);
    return out;
}

} // namespace qvac
