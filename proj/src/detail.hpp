// SPDX-License-Identifier: Apache-2.0
//
// attocell: interference and SINR in regular Li-Fi LED lattices
// Copyright (C) 2026 The attocell authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ATTOCELL_SRC_DETAIL_HPP
#define ATTOCELL_SRC_DETAIL_HPP

#include "attocell/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace attocell::detail
{

// Neumaier compensated summation.
class CompensatedSum
{
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// cos(2 pi x) with the argument reduced to [-1/2, 1/2] first; quarter
// periods give an exact zero.
inline double cos_2pi(double x)
{
    const double r = x - std::nearbyint(x);
    if (std::abs(r) == 0.25)
        return 0.0;
    return std::cos(2.0 * std::numbers::pi * r);
}

inline void require_finite(double v, const char *name)
{
    if (!std::isfinite(v))
        throw DomainError(std::string(name) + " must be finite");
}

// Geometric breakpoints 0, s, 2s, 4s, ... clipped to r.
template <class F>
double integrate_geometric(const F &f, double s, double r, const QuadratureSpec &spec,
                           double abs_tol)
{
    int pieces = 1;
    for (double edge = s; edge < r; edge *= 2.0)
        ++pieces;
    QuadratureSpec local = spec;
    local.abs_tol = abs_tol / pieces;

    CompensatedSum total;
    double lo = 0.0;
    double hi = std::min(s, r);
    while (lo < r) {
        total.add(integrate(f, lo, hi, local));
        lo = hi;
        hi = std::min(2.0 * hi, r);
    }
    return total.value();
}

} // namespace attocell::detail

#endif
