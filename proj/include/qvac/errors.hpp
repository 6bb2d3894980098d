// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#pragma once

#include <stdexcept>
#include <string>

namespace qvac {

/// Malformed or inconsistent input data (particle tables, constants files).
class ValidationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A numeric precondition failed or a result lies outside its domain.
class DomainError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A file could not be opened or read.
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qvac
