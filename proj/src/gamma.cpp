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

namespace attocell
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int max_iter = 2000;

bool finite_positive(double v)
{
    return std::isfinite(v) && v > 0.0;
}

} // namespace

double gamma(double x)
{
    if (!finite_positive(x))
        throw DomainError("gamma: requires x > 0");
    return std::tgamma(x);
}

double upper_incomplete_gamma(double s, double x)
{
    if (!finite_positive(s) || !(x >= 0.0) || std::isnan(x))
        throw DomainError("upper_incomplete_gamma: requires s > 0 and x >= 0");
    if (x == 0.0)
        return gamma(s);
    if (std::isinf(x))
        return 0.0;

    const double log_pref = -x + s * std::log(x);

    if (x < s + 1.0) {
        // lower gamma by its power series, then complement
        double ap = s;
        double del = 1.0 / s;
        double sum = del;
        int n = 0;
        for (; n < max_iter; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * eps)
                break;
        }
        if (n == max_iter)
            throw ConvergenceError("upper_incomplete_gamma: series did not converge");
        return gamma(s) - sum * std::exp(log_pref);
    }

    // modified Lentz on the Legendre continued fraction
    constexpr double fpmin = std::numeric_limits<double>::min() / eps;
    double b = x + 1.0 - s;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    int i = 1;
    for (; i <= max_iter; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps)
            break;
    }
    if (i > max_iter)
        throw ConvergenceError("upper_incomplete_gamma: continued fraction did not converge");
    return std::exp(log_pref) * h;
}

double t_hyp2f1_half(double beta, double t)
{
    if (!(beta > 1.0) || !std::isfinite(beta) || !(t >= 0.0) || std::isnan(t))
        throw DomainError("hyp2f1_half: requires beta > 1 and t >= 0");
    if (t == 0.0)
        return 0.0;

    const double full = std::sqrt(std::numbers::pi)
                        * std::exp(std::lgamma(beta - 0.5) - std::lgamma(beta)) / 2.0;
    if (std::isinf(t))
        return full;

    // u = sin^2(atan t), c = cos^2(atan t), computed without cancellation
    const double c = 1.0 / (1.0 + t * t);
    const double u = t * t * c;

    if (u <= 0.5) {
        // Pfaff: (1+t^2)^-beta 2F1(1, beta; 3/2; u)
        double term = 1.0;
        double sum = 1.0;
        int n = 0;
        for (; n < max_iter; ++n) {
            term *= (beta + n) / (1.5 + n) * u;
            sum += term;
            if (std::abs(term) < std::abs(sum) * eps)
                break;
        }
        if (n == max_iter)
            throw ConvergenceError("hyp2f1_half: series did not converge");
        return t * std::pow(c, beta) * sum;
    }

    // complement of the tail integral int_t^inf (1+s^2)^-beta ds, a series in c
    const double b = beta - 0.5;
    double term = 1.0;
    double sum = 1.0;
    int n = 0;
    for (; n < max_iter; ++n) {
        term *= (0.5 + n) * (b + n) / ((beta + 0.5 + n) * (n + 1.0)) * c;
        sum += term;
        if (std::abs(term) < std::abs(sum) * eps)
            break;
    }
    if (n == max_iter)
        throw ConvergenceError("hyp2f1_half: tail series did not converge");
    const double tail = 0.5 * std::pow(c, b) / b * sum;
    return full - tail;
}

double hyp2f1_half(double beta, double t)
{
    if (t == 0.0 && beta > 1.0 && std::isfinite(beta))
        return 1.0;
    const double tf = t_hyp2f1_half(beta, t);
    return tf / t;
}

} // namespace attocell
