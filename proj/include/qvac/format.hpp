// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#pragma once

#include <string>

namespace qvac {

//! 12 significant digits, `%.12g` style, locale independent.
std::string format_sig12(double value);

//! Shortest string that parses back to the same double.
std::string format_shortest(double value);

//! Scientific notation of exp(log_value), e.g. "1.23456789012e+2500",
//! valid far beyond the double range.
std::string format_sci_from_log(double log_value);

} // namespace qvac
