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

#ifndef ATTOCELL_FIELD1D_HPP
#define ATTOCELL_FIELD1D_HPP

#include "attocell/channel.hpp"
#include "attocell/interference.hpp"
#include "attocell/specfun.hpp"

namespace attocell
{

// Symmetric window i in [-n, n] \ {0}.
InterferenceResult interference_oracle_1d(const NetworkParams &params, double z, int n);

// Rigorous bound on the part of the infinite sum outside the window n;
// +inf when |z| > n a.
double oracle_tail_bound_1d(const NetworkParams &params, double z, int n);

// w-th spectral correction term of the Poisson-summed series.
double g_term_1d(const NetworkParams &params, double z, int w);

// Zero-frequency term h^(1-2b) sqrt(pi) G(b - 1/2) / (a G(b)).
double constant_term_1d(const NetworkParams &params);

// Truncated closed form with spectral terms w = 1..k.
InterferenceResult closed_form_1d(const NetworkParams &params, double z, int k);

ErrorDiagnostics error_diagnostics_1d(const NetworkParams &params, int k);

// Smallest k >= k_min_rule whose tail bound is <= target (cap 64).
int choose_k_1d(const NetworkParams &params, double target_abs_error);

// Field-of-view limited zero-frequency integral int_{-T}^{T} (x^2+h^2)^-b dx.
double q0_fov_1d(const NetworkParams &params);

// Q'(w/a) = int_0^T 2 cos(2 pi w x / a) / (x^2+h^2)^b dx, T = h tan(theta_f).
// Tolerances in spec are taken relative to h^(1-2b), the scale of the integrand mass.
double q_fov_1d(const NetworkParams &params, int w, const QuadratureSpec &spec = {});

InterferenceResult interference_fov_1d(const NetworkParams &params, double z, int k,
                                       const QuadratureSpec &spec = {});

// Exact finite sum over LEDs visible to the receiver.
InterferenceResult interference_fov_oracle_1d(const NetworkParams &params, double z);

} // namespace attocell

#endif
