// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace qvac {

/// Arbitrary-precision exact rational; always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "n", "+n", "-n" or "n/d" (d > 0). Throws ValidationError.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& value);

/// Nearest double.
double to_double(const Rational& value);

} // namespace qvac
