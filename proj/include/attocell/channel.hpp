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

#ifndef ATTOCELL_CHANNEL_HPP
#define ATTOCELL_CHANNEL_HPP

#include <numbers>

namespace attocell
{

struct DerivedOptics
{
    double m = 1.0;    // Lambertian order
    double beta = 4.0; // m + 3
};

// Lattice geometry, LED optics, receiver and transmit power. SI units.
struct NetworkParams
{
    double h = 2.5;                           // LED mounting height [m]
    double a = 0.5;                           // inter-LED spacing [m]
    double theta_h = std::numbers::pi / 3.0;  // half-power semi-angle [rad]
    double theta_f = std::numbers::pi / 2.0;  // receiver field of view [rad]
    double A_pd = 1e-4;                       // photodiode area [m^2]
    double R_pd = 0.1;                        // responsivity [A/W]
    double P_o = 1.0;                         // average optical power [W]

    void validate() const;
    DerivedOptics optics() const;
};

// Table I receiver noise defaults.
struct NoiseParams
{
    double N0 = 4.14e-21; // noise power spectral density, stored as given
    double W = 4e7;       // modulation bandwidth [Hz]
    double T = 300.0;     // temperature [K], informational

    void validate() const;
};

DerivedOptics lambertian_order(double theta_h);

// True when theta_f is the half-plane field of view (pi/2 up to rounding).
bool fov_unrestricted(double theta_f);

// h tan(theta_f); +inf for the unrestricted field of view.
double fov_radius(double h, double theta_f);

// 1 if |D| <= h tan(theta_f), else 0. The boundary counts as inside.
int fov_indicator(double D, double h, double theta_f);

// Line-of-sight gain from an LED at ground distance D.
double channel_gain(const NetworkParams &params, double D);

} // namespace attocell

#endif
