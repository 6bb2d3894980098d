// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qvac Authors
#pragma once

#include <cmath>

namespace qvac {

/*!
 * Running sum with Neumaier's compensation.
 *
 * The low-order bits lost by each addition are recovered with an
 * error-free two-sum and folded back in when the value is read. Unlike
 * plain Kahan this stays exact when an addend is larger in magnitude than
 * the running total.
 */
class CompensatedSum
{
  public:
    CompensatedSum& operator+=(double value) noexcept
    {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value))
            compensation_ += (sum_ - t) + value;
        else
            compensation_ += (value - t) + sum_;
        sum_ = t;
        return *this;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

  private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

} // namespace qvac
