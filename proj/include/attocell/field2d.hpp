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

#ifndef ATTOCELL_FIELD2D_HPP
#define ATTOCELL_FIELD2D_HPP

#include "attocell/channel.hpp"
#include "attocell/interference.hpp"
#include "attocell/specfun.hpp"

namespace attocell
{

// The spectral index set ([0, j] x [0, l] in Z^2) minus the origin.
struct GridIndexSet
{
    int j = 1;
    int l = 1;

    void validate() const;
    long long size() const { return (j + 1LL) * (l + 1LL) - 1; }
};

// Square window (u, v) in [-n, n]^2 \ {(0, 0)}.
InterferenceResult interference_oracle_2d(const NetworkParams &params, double dx, double dy,
                                          int n);

// (w, k) spectral term. It already carries the factor four of the four
// sign combinations (+-w, +-k), so axis terms (w = 0 or k = 0), which have
// only two such partners, are summed with weight 1/2.
double g_term_2d(const NetworkParams &params, double dx, double dy, int w, int k);

// Multiplicity weight applied to g_term_2d in the truncated series.
double spectral_weight_2d(int w, int k);

// h^(2-2b) pi / (a^2 (b - 1)).
double constant_term_2d(const NetworkParams &params);

InterferenceResult closed_form_2d(const NetworkParams &params, double dx, double dy,
                                  const GridIndexSet &idx);

// k_min_rule is the radius threshold ceil(a (b - 5/2) / (2 pi h)) that
// sqrt(j^2 + l^2) must meet; term_peak is r0.
ErrorDiagnostics error_diagnostics_2d(const NetworkParams &params, const GridIndexSet &idx);

// Smallest square set j = l meeting the radius rule and the tail target (cap 64).
GridIndexSet choose_jl_2d(const NetworkParams &params, double target_abs_error);

// Field-of-view limited zero-frequency integral over the disc of radius h tan(theta_f).
double q00_fov_2d(const NetworkParams &params);

// Hankel-transform integral 2 pi int_0^T J0(2 pi r s) r / (r^2+h^2)^b dr with
// s = sqrt(w^2 + k^2) / a. Tolerances in spec are relative to h^(2-2b).
double q_fov_2d(const NetworkParams &params, int w, int k, const QuadratureSpec &spec = {});

InterferenceResult interference_fov_2d(const NetworkParams &params, double dx, double dy,
                                       const GridIndexSet &idx, const QuadratureSpec &spec = {});

// Exact finite sum over lattice LEDs within the circular field of view.
InterferenceResult interference_fov_oracle_2d(const NetworkParams &params, double dx, double dy);

// Rigorous bound on the part of the infinite lattice sum outside the square window n.
double oracle_tail_bound_2d(const NetworkParams &params, double dx, double dy, int n);

} // namespace attocell

#endif
