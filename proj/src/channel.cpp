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

#include "attocell/channel.hpp"
#include "attocell/specfun.hpp"

#include <cmath>
#include <limits>

namespace attocell
{

namespace
{

constexpr double half_pi = std::numbers::pi / 2.0;

bool positive(double v)
{
    return std::isfinite(v) && v > 0.0;
}

} // namespace

DerivedOptics lambertian_order(double theta_h)
{
    if (!(theta_h > 0.0) || !(theta_h < half_pi))
        throw DomainError("lambertian_order: requires 0 < theta_h < pi/2");
    const double c = std::cos(theta_h);
    const double m = -std::numbers::ln2 / std::log(c);
    if (!positive(m))
        throw DomainError("lambertian_order: order is not finite for this theta_h");
    return {m, m + 3.0};
}

bool fov_unrestricted(double theta_f)
{
    return theta_f >= half_pi - 4.0 * std::numeric_limits<double>::epsilon();
}

double fov_radius(double h, double theta_f)
{
    if (fov_unrestricted(theta_f))
        return std::numeric_limits<double>::infinity();
    return h * std::tan(theta_f);
}

int fov_indicator(double D, double h, double theta_f)
{
    if (fov_unrestricted(theta_f))
        return 1;
    return std::abs(D) <= h * std::tan(theta_f) ? 1 : 0;
}

void NetworkParams::validate() const
{
    if (!positive(h) || !positive(a))
        throw DomainError("NetworkParams: h and a must be > 0");
    if (!positive(A_pd) || !positive(R_pd) || !positive(P_o))
        throw DomainError("NetworkParams: A_pd, R_pd and P_o must be > 0");
    if (!(theta_h > 0.0) || !(theta_h < half_pi))
        throw DomainError("NetworkParams: theta_h must lie in (0, pi/2)");
    if (!(theta_f > 0.0) || theta_f > half_pi + 4.0 * std::numeric_limits<double>::epsilon())
        throw DomainError("NetworkParams: theta_f must lie in (0, pi/2]");
    lambertian_order(theta_h);
}

DerivedOptics NetworkParams::optics() const
{
    return lambertian_order(theta_h);
}

void NoiseParams::validate() const
{
    if (!(N0 >= 0.0) || !std::isfinite(N0) || !positive(W))
        throw DomainError("NoiseParams: requires N0 >= 0 and W > 0");
}

double channel_gain(const NetworkParams &params, double D)
{
    params.validate();
    if (!fov_indicator(D, params.h, params.theta_f))
        return 0.0;
    const auto [m, beta] = params.optics();
    const double h = params.h;
    return (m + 1.0) * params.A_pd * std::pow(h, m + 1.0) / (2.0 * std::numbers::pi)
           * std::pow(D * D + h * h, -beta / 2.0);
}

} // namespace attocell
