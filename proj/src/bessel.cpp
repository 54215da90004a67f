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

#include "attocell/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace attocell
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double pi = std::numbers::pi;

// Taylor coefficients of 1/Gamma(1+z) about z = 0.
constexpr double rgamma1p[] = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
};
constexpr int n_rgamma = sizeof(rgamma1p) / sizeof(rgamma1p[0]);

// Temme's gam1 = (1/G(1-mu) - 1/G(1+mu)) / (2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu)) / 2.
void temme_gammas(double mu, double &gam1, double &gam2)
{
    const double mu2 = mu * mu;
    double odd = 0.0, even = 0.0;
    for (int k = n_rgamma - 1; k >= 0; --k) {
        if (k % 2 == 1)
            odd = odd * mu2 + rgamma1p[k];
        else
            even = even * mu2 + rgamma1p[k];
    }
    gam1 = -odd;
    gam2 = even;
}

// Scaled K_mu, K_{mu+1} for |mu| <= 1/2, x < 2.
std::pair<double, double> k_temme(double mu, double x)
{
    const double x2 = 0.5 * x;
    const double pimu = pi * mu;
    const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;

    double gam1, gam2;
    temme_gammas(mu, gam1, gam2);
    const double gampl = gam2 - mu * gam1;
    const double gammi = gam2 + mu * gam1;

    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;

    int i = 1;
    for (; i < 500; ++i) {
        ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu * mu);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::abs(del) < std::abs(sum) * eps)
            break;
    }
    if (i == 500)
        throw ConvergenceError("bessel_k: series did not converge");

    const double ex = std::exp(x);
    return {sum * ex, sum1 * (2.0 / x) * ex};
}

// exp(x) K_mu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(mu t) dt.
// The integrand is analytic and decays doubly exponentially, so the plain
// trapezoidal rule converges geometrically in the step.
double k_trapezoid(double mu, double x)
{
    constexpr double step = 0.0625;
    const double tmax = std::acosh(1.0 + 80.0 / x) + 1.0;
    double sum = 0.5;
    for (double t = step; t <= tmax; t += step)
        sum += std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(mu * t);
    return sum * step;
}

double k_asymptotic(double mu, double x)
{
    const double m4 = 4.0 * mu * mu;
    double term = 1.0;
    double sum = 1.0;
    double last = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (m4 - odd * odd) / (k * 8.0 * x);
        if (std::abs(term) > std::abs(last) && k > 2)
            break;
        sum += term;
        if (std::abs(term) < std::abs(sum) * eps)
            break;
        last = term;
    }
    return std::sqrt(pi / (2.0 * x)) * sum;
}

std::pair<double, double> k_pair(double mu, double x)
{
    if (x < 2.0)
        return k_temme(mu, x);
    if (x < 30.0)
        return {k_trapezoid(mu, x), k_trapezoid(mu + 1.0, x)};
    return {k_asymptotic(mu, x), k_asymptotic(mu + 1.0, x)};
}

void check_k_domain(double nu, double x)
{
    if (!(nu >= 0.0) || !std::isfinite(nu))
        throw DomainError("bessel_k: requires finite nu >= 0");
    if (!(x > 0.0) || std::isnan(x))
        throw DomainError("bessel_k: requires x > 0");
}

} // namespace

double bessel_k_scaled(double nu, double x)
{
    check_k_domain(nu, x);
    if (std::isinf(x))
        return 0.0;

    const double n = std::nearbyint(nu);
    const double mu = nu - n;
    auto [k0, k1] = k_pair(mu, x);
    if (n == 0.0)
        return k0;

    // forward recurrence is stable for K
    for (int k = 1; k < static_cast<int>(n); ++k) {
        const double next = k0 + 2.0 * (mu + k) / x * k1;
        k0 = k1;
        k1 = next;
    }
    return k1;
}

BesselKResult bessel_k_checked(double nu, double x)
{
    const double s = bessel_k_scaled(nu, x);
    if (s == 0.0)
        return {0.0, true};
    const double log_k = std::log(s) - x;
    if (log_k < std::log(std::numeric_limits<double>::min()))
        return {0.0, true};
    return {x < 700.0 ? s * std::exp(-x) : std::exp(log_k), false};
}

double bessel_k(double nu, double x)
{
    return bessel_k_checked(nu, x).value;
}

namespace
{

double j0_series(double x)
{
    const double q = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 100; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-17)
            break;
    }
    return sum;
}

// Miller's backward recurrence, normalised by J0 + 2 sum J_2k = 1.
double j0_miller(double x)
{
    int start = static_cast<int>(x) + 40;
    if (start % 2 == 1)
        ++start;
    double jp1 = 0.0;
    double j = 1e-30;
    double norm = 0.0;
    double j0 = 0.0;
    for (int k = start; k >= 1; --k) {
        const double jm1 = 2.0 * k / x * j - jp1;
        jp1 = j;
        j = jm1;
        if (std::abs(j) > 1e250) {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
        }
        if ((k - 1) % 2 == 0 && k - 1 > 0)
            norm += 2.0 * j;
    }
    j0 = j;
    norm += j0;
    return j0 / norm;
}

double j0_asymptotic(double x)
{
    // a_k = prod_{i=1..k} (-(2i-1)^2) / (k! 8^k)
    double p = 1.0, q = 0.0;
    double a = 1.0;
    double last = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        a *= -odd * odd / (k * 8.0 * x);
        if (std::abs(a) > std::abs(last) && k > 2)
            break;
        // terms alternate between Q (odd k) and P (even k)
        switch (k % 4) {
        case 1: q += a; break;
        case 2: p -= a; break;
        case 3: q -= a; break;
        default: p += a; break;
        }
        if (std::abs(a) < 1e-17)
            break;
        last = a;
    }
    const double s = std::sin(x);
    const double c = std::cos(x);
    const double cos_chi = (c + s) / std::numbers::sqrt2;
    const double sin_chi = (s - c) / std::numbers::sqrt2;
    return std::sqrt(2.0 / (pi * x)) * (p * cos_chi - q * sin_chi);
}

} // namespace

double bessel_j0(double x)
{
    if (std::isnan(x))
        return x;
    const double ax = std::abs(x);
    if (std::isinf(ax))
        return 0.0;
    if (ax <= 8.0)
        return j0_series(ax);
    if (ax <= 25.0)
        return j0_miller(ax);
    return j0_asymptotic(ax);
}

} // namespace attocell
