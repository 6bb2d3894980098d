// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#include "qvac/rational.hpp"

#include "qvac/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qvac {
namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '+' || s.front() == '-'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

boost::multiprecision::cpp_int parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return boost::multiprecision::cpp_int(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text))
        throw ValidationError("unparseable rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num_text));

    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+'
        || !is_integer_literal(den_text))
        throw ValidationError("unparseable rational '" + std::string(text) + "'");
    const auto den = parse_integer(den_text);
    if (den == 0)
        throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num_text), den);
}

std::string to_string(const Rational& value)
{
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& value)
{
    return value.convert_to<double>();
}

} // namespace qvac
