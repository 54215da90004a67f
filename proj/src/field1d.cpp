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

#include "attocell/field1d.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace attocell
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr int k_cap = 64;
constexpr double max_enumeration = 1e8;

double self_term(double z, double h, double beta)
{
    return std::pow(z * z + h * h, -beta);
}

// Unrestricted spectral integral int_R cos(2 pi w x / a) (x^2+h^2)^-b dx.
double q_full_1d(double h, double a, double beta, int w)
{
    const double nu = beta - 0.5;
    const double x = 2.0 * pi * h * w / a;
    const double ks = bessel_k_scaled(nu, x);
    if (ks == 0.0)
        return 0.0;
    const double log_q = std::log(2.0) + 0.5 * std::log(pi) - std::lgamma(beta)
                         + nu * std::log(pi * w / (a * h)) + std::log(ks) - x;
    return std::exp(log_q);
}

} // namespace

double oracle_tail_bound_1d(const NetworkParams &params, double z, int n)
{
    params.validate();
    const double beta = params.optics().beta;
    const double h = params.h;
    // each omitted term is dominated by the integral over the cell behind it
    const double x = n * params.a - std::abs(z);
    if (x < 0.0)
        return std::numeric_limits<double>::infinity();
    double tail = std::pow(h, 1.0 - 2.0 * beta) * std::sqrt(pi)
                  * std::exp(std::lgamma(beta - 0.5) - std::lgamma(beta)) / 2.0;
    if (x > 0.0)
        tail = std::min(tail, std::pow(x, 1.0 - 2.0 * beta) / (2.0 * beta - 1.0));
    return 2.0 * tail / params.a;
}

InterferenceResult interference_oracle_1d(const NetworkParams &params, double z, int n)
{
    params.validate();
    detail::require_finite(z, "z");
    if (n < 1)
        throw DomainError("interference_oracle_1d: n must be >= 1");

    const double beta = params.optics().beta;
    const double a = params.a;
    const double h = params.h;

    detail::CompensatedSum sum;
    for (int i = n; i >= 1; --i) {
        const double right = i * a + z;
        const double left = -i * a + z;
        // the pair is added as one term so z -> -z gives the same bits
        sum.add(std::pow(right * right + h * h, -beta) + std::pow(left * left + h * h, -beta));
    }

    InterferenceResult r;
    r.value = sum.value();
    r.method = Method::oracle;
    r.terms_used = 2LL * n;

    const double tail = oracle_tail_bound_1d(params, z, n);
    if (std::isfinite(tail))
        r.error_envelope = tail;
    return r;
}

double g_term_1d(const NetworkParams &params, double z, int w)
{
    params.validate();
    detail::require_finite(z, "z");
    if (w < 1)
        throw DomainError("g_term_1d: w must be >= 1");

    const double c = detail::cos_2pi(w * z / params.a);
    if (c == 0.0)
        return 0.0;
    const double beta = params.optics().beta;
    return 2.0 / params.a * q_full_1d(params.h, params.a, beta, w) * c;
}

double constant_term_1d(const NetworkParams &params)
{
    params.validate();
    const double beta = params.optics().beta;
    return std::pow(params.h, 1.0 - 2.0 * beta) * std::sqrt(pi)
           * std::exp(std::lgamma(beta - 0.5) - std::lgamma(beta)) / params.a;
}

InterferenceResult closed_form_1d(const NetworkParams &params, double z, int k)
{
    params.validate();
    detail::require_finite(z, "z");
    if (k < 0)
        throw DomainError("closed_form_1d: k must be >= 0");

    const double beta = params.optics().beta;
    detail::CompensatedSum sum;
    for (int w = k; w >= 1; --w)
        sum.add(g_term_1d(params, z, w));
    sum.add(-self_term(z, params.h, beta));
    sum.add(constant_term_1d(params));

    InterferenceResult r;
    r.value = sum.value();
    r.method = Method::closed_form;
    r.terms_used = k;
    r.error_envelope = error_diagnostics_1d(params, k).envelope;
    return r;
}

ErrorDiagnostics error_diagnostics_1d(const NetworkParams &params, int k)
{
    params.validate();
    if (k < 0)
        throw DomainError("error_diagnostics_1d: k must be >= 0");

    const double beta = params.optics().beta;
    const double ratio = params.a / (2.0 * pi * params.h);
    const double x = (k + 1.0) / ratio;

    ErrorDiagnostics d;
    d.term_peak = ratio * (beta - 2.0);
    d.k_min_rule = static_cast<long long>(std::ceil(d.term_peak));
    d.envelope = std::exp((beta - 2.0) * std::log(k + 1.0) - x);
    d.tail_gamma_bound = std::pow(ratio, beta - 1.0) * upper_incomplete_gamma(beta - 1.0, x);
    return d;
}

int choose_k_1d(const NetworkParams &params, double target_abs_error)
{
    if (!(target_abs_error > 0.0) || std::isnan(target_abs_error))
        throw DomainError("choose_k_1d: target must be > 0");
    const long long k_min = error_diagnostics_1d(params, 0).k_min_rule;
    for (long long k = k_min; k <= k_cap; ++k) {
        if (error_diagnostics_1d(params, static_cast<int>(k)).tail_gamma_bound <= target_abs_error)
            return static_cast<int>(k);
    }
    throw ConvergenceError("choose_k_1d: target not reached within k <= 64");
}

double q0_fov_1d(const NetworkParams &params)
{
    params.validate();
    if (fov_unrestricted(params.theta_f))
        return constant_term_1d(params) * params.a;
    const double beta = params.optics().beta;
    return 2.0 * std::pow(params.h, 1.0 - 2.0 * beta)
           * t_hyp2f1_half(beta, std::tan(params.theta_f));
}

double q_fov_1d(const NetworkParams &params, int w, const QuadratureSpec &spec)
{
    params.validate();
    spec.validate();
    if (w < 0)
        throw DomainError("q_fov_1d: w must be >= 0");
    if (w == 0)
        return q0_fov_1d(params);

    const double beta = params.optics().beta;
    const double h = params.h;
    const double a = params.a;
    if (fov_unrestricted(params.theta_f))
        return q_full_1d(h, a, beta, w);

    const double scale = std::pow(h, 1.0 - 2.0 * beta);
    const double abs_tol = spec.abs_tol * scale;
    // beyond xcut the integrand mass is below 1% of the tolerance
    const double xcut = std::pow(0.005 * abs_tol * (2.0 * beta - 1.0), 1.0 / (1.0 - 2.0 * beta));
    const double r = std::min(fov_radius(h, params.theta_f), std::max(xcut, h));
    const double freq = 2.0 * pi * w / a;

    auto f = [=](double x) { return 2.0 * std::cos(freq * x) * std::pow(x * x + h * h, -beta); };
    return detail::integrate_geometric(f, h, r, spec, abs_tol);
}

InterferenceResult interference_fov_1d(const NetworkParams &params, double z, int k,
                                       const QuadratureSpec &spec)
{
    params.validate();
    detail::require_finite(z, "z");
    if (k < 0)
        throw DomainError("interference_fov_1d: k must be >= 0");

    const double beta = params.optics().beta;
    detail::CompensatedSum sum;
    for (int w = k; w >= 1; --w) {
        const double c = detail::cos_2pi(w * z / params.a);
        if (c != 0.0)
            sum.add(2.0 * q_fov_1d(params, w, spec) * c);
    }
    sum.add(q0_fov_1d(params));

    InterferenceResult r;
    r.value = sum.value() / params.a;
    if (fov_indicator(z, params.h, params.theta_f))
        r.value -= self_term(z, params.h, beta);
    r.method = Method::fov_closed_form;
    r.terms_used = k;
    return r;
}

InterferenceResult interference_fov_oracle_1d(const NetworkParams &params, double z)
{
    params.validate();
    detail::require_finite(z, "z");
    if (fov_unrestricted(params.theta_f))
        throw DomainError("interference_fov_oracle_1d: requires theta_f < pi/2");

    const double beta = params.optics().beta;
    const double a = params.a;
    const double h = params.h;
    const double t = fov_radius(h, params.theta_f);
    const double lo = std::floor((-t - z) / a) - 1.0;
    const double hi = std::ceil((t - z) / a) + 1.0;
    if (hi - lo > max_enumeration)
        throw DomainError("interference_fov_oracle_1d: field of view too wide to enumerate");

    detail::CompensatedSum sum;
    long long count = 0;
    for (long long i = static_cast<long long>(lo); i <= static_cast<long long>(hi); ++i) {
        if (i == 0)
            continue;
        const double d = i * a + z;
        if (!fov_indicator(d, h, params.theta_f))
            continue;
        sum.add(std::pow(d * d + h * h, -beta));
        ++count;
    }

    InterferenceResult r;
    r.value = sum.value();
    r.method = Method::fov_oracle;
    r.terms_used = count;
    r.error_envelope = 0.0;
    return r;
}

} // namespace attocell
