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

#ifndef ATTOCELL_SPECFUN_HPP
#define ATTOCELL_SPECFUN_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace attocell
{

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Iterative method or quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct QuadratureSpec
{
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 40;

    void validate() const;
};

// Gamma(x) for x > 0.
double gamma(double x);

// Upper incomplete gamma Gamma(s, x) = int_x^inf t^(s-1) e^-t dt.
double upper_incomplete_gamma(double s, double x);

struct BesselKResult
{
    double value = 0.0;
    bool underflow = false;
};

// Modified Bessel function of the second kind, real order nu in [0, inf).
// Values below the smallest normal double come back as 0 with underflow set.
BesselKResult bessel_k_checked(double nu, double x);
double bessel_k(double nu, double x);

// exp(x) * K_nu(x); never underflows for the orders used here.
double bessel_k_scaled(double nu, double x);

// Bessel function of the first kind, order zero.
double bessel_j0(double x);

// 2F1(1/2, beta; 3/2; -t^2) for beta > 1, t >= 0.
double hyp2f1_half(double beta, double t);

// Same quantity multiplied by t. Stays finite as t -> inf.
double t_hyp2f1_half(double beta, double t);

// Globally adaptive Gauss-Kronrod (7, 15) quadrature on [lo, hi].
// Throws ConvergenceError when no interval above max_depth remains to split
// and the accumulated error estimate still exceeds the tolerance.
double integrate(const std::function<double(double)> &f, double lo, double hi,
                 const QuadratureSpec &spec = {});

struct QuadratureResult
{
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
};

QuadratureResult integrate_detailed(const std::function<double(double)> &f, double lo,
                                    double hi, const QuadratureSpec &spec = {});

} // namespace attocell

#endif
