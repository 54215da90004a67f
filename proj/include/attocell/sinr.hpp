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

#ifndef ATTOCELL_SINR_HPP
#define ATTOCELL_SINR_HPP

#include "attocell/channel.hpp"
#include "attocell/field2d.hpp"
#include "attocell/interference.hpp"
#include "attocell/specfun.hpp"

namespace attocell
{

// Order parameters; each method reads only its own field.
struct InterferenceOrder
{
    int n = 100;             // oracle window
    int k = 1;               // 1-D closed forms
    GridIndexSet jl{1, 1};   // 2-D closed forms
};

struct SinrResult
{
    double sinr_linear = 0.0;
    double sinr_db = 0.0;
    double signal_term = 0.0;
    double interference_term = 0.0;
    double omega = 0.0;
    bool infinite = false; // zero denominator with a visible serving LED
    InterferenceResult interference;
};

// 4 pi^2 N0 W / (P_o^2 (m+1)^2 A_pd^2 R_pd^2 h^(2m+2)).
double omega(const NetworkParams &net, const NoiseParams &noise);

SinrResult sinr_1d(const NetworkParams &net, const NoiseParams &noise, double z, Method method,
                   const InterferenceOrder &order = {}, const QuadratureSpec &spec = {});

SinrResult sinr_2d(const NetworkParams &net, const NoiseParams &noise, double dx, double dy,
                   Method method, const InterferenceOrder &order = {},
                   const QuadratureSpec &spec = {});

} // namespace attocell

#endif
