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

#include "attocell/sinr.hpp"

#include "attocell/field1d.hpp"
#include "attocell/field2d.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace attocell
{

namespace
{

SinrResult assemble(double signal, const InterferenceResult &interference, double om)
{
    SinrResult r;
    r.signal_term = signal;
    r.interference_term = interference.value;
    r.omega = om;
    r.interference = interference;

    const double denom = interference.value + om;
    if (signal == 0.0) {
        r.sinr_linear = 0.0;
    } else if (denom == 0.0) {
        r.sinr_linear = std::numeric_limits<double>::infinity();
        r.infinite = true;
    } else {
        r.sinr_linear = signal / denom;
    }
    r.sinr_db = r.sinr_linear > 0.0 ? 10.0 * std::log10(r.sinr_linear)
                                    : -std::numeric_limits<double>::infinity();
    return r;
}

} // namespace

double omega(const NetworkParams &net, const NoiseParams &noise)
{
    net.validate();
    noise.validate();
    const double m = net.optics().m;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double gain = net.P_o * (m + 1.0) * net.A_pd * net.R_pd;
    return 4.0 * pi2 * noise.N0 * noise.W / (gain * gain * std::pow(net.h, 2.0 * m + 2.0));
}

SinrResult sinr_1d(const NetworkParams &net, const NoiseParams &noise, double z, Method method,
                   const InterferenceOrder &order, const QuadratureSpec &spec)
{
    const double om = omega(net, noise);
    const double beta = net.optics().beta;
    const double signal =
        std::pow(z * z + net.h * net.h, -beta) * fov_indicator(z, net.h, net.theta_f);

    InterferenceResult interference;
    switch (method) {
    case Method::oracle: interference = interference_oracle_1d(net, z, order.n); break;
    case Method::closed_form: interference = closed_form_1d(net, z, order.k); break;
    case Method::fov_closed_form: interference = interference_fov_1d(net, z, order.k, spec); break;
    case Method::fov_oracle: interference = interference_fov_oracle_1d(net, z); break;
    }
    return assemble(signal, interference, om);
}

SinrResult sinr_2d(const NetworkParams &net, const NoiseParams &noise, double dx, double dy,
                   Method method, const InterferenceOrder &order, const QuadratureSpec &spec)
{
    const double om = omega(net, noise);
    const double beta = net.optics().beta;
    const double signal = std::pow(dx * dx + dy * dy + net.h * net.h, -beta)
                          * fov_indicator(std::hypot(dx, dy), net.h, net.theta_f);

    InterferenceResult interference;
    switch (method) {
    case Method::oracle: interference = interference_oracle_2d(net, dx, dy, order.n); break;
    case Method::closed_form: interference = closed_form_2d(net, dx, dy, order.jl); break;
    case Method::fov_closed_form:
        interference = interference_fov_2d(net, dx, dy, order.jl, spec);
        break;
    case Method::fov_oracle: interference = interference_fov_oracle_2d(net, dx, dy); break;
    }
    return assemble(signal, interference, om);
}

} // namespace attocell
