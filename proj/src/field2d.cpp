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

#include "attocell/field2d.hpp"

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>
#include <vector>

namespace attocell
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr int jl_cap = 64;
constexpr double max_enumeration = 1e8;

double self_term(double dx, double dy, double h, double beta)
{
    return std::pow(dx * dx + dy * dy + h * h, -beta);
}

// Unrestricted Hankel transform of (r^2+h^2)^-b at angular frequency s.
double q_full_2d(double h, double a, double beta, int w, int k)
{
    const double s = 2.0 * pi * std::hypot(static_cast<double>(w), static_cast<double>(k)) / a;
    const double x = h * s;
    const double ks = bessel_k_scaled(beta - 1.0, x);
    if (ks == 0.0)
        return 0.0;
    const double log_q = (2.0 - beta) * std::log(2.0) + std::log(pi) - std::lgamma(beta)
                         + (1.0 - beta) * std::log(h / s) + std::log(ks) - x;
    return std::exp(log_q);
}

// (w, k) pairs of the index set ordered by w^2 + k^2, then w.
std::vector<std::pair<int, int>> ordered_indices(const GridIndexSet &idx)
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(idx.size()));
    for (int w = 0; w <= idx.j; ++w)
        for (int k = 0; k <= idx.l; ++k)
            if (w != 0 || k != 0)
                out.emplace_back(w, k);
    std::sort(out.begin(), out.end(), [](const auto &p, const auto &q) {
        const int rp = p.first * p.first + p.second * p.second;
        const int rq = q.first * q.first + q.second * q.second;
        return std::tie(rp, p.first) < std::tie(rq, q.first);
    });
    return out;
}

// Approximate positive zeros of J0 (McMahon); used only as breakpoints.
double j0_zero(int n)
{
    const double b = (n - 0.25) * pi;
    const double b2 = b * b;
    return b + 1.0 / (8.0 * b) - 31.0 / (384.0 * b * b2) + 3779.0 / (15360.0 * b * b2 * b2);
}

} // namespace

void GridIndexSet::validate() const
{
    if (j < 0 || l < 0)
        throw DomainError("GridIndexSet: j and l must be >= 0");
}

double oracle_tail_bound_2d(const NetworkParams &params, double dx, double dy, int n)
{
    params.validate();
    const double beta = params.optics().beta;
    const double a = params.a;
    // omitted centres lie at distance >= rho0; a cell around each stays within a / sqrt(2)
    const double rho0 = (n + 1.0) * a - std::max(std::abs(dx), std::abs(dy));
    const double s = rho0 - std::numbers::sqrt2 * a;
    if (!(s > 0.0))
        return std::numeric_limits<double>::infinity();
    return 2.0 * pi / (a * a)
           * (std::pow(s, 2.0 - 2.0 * beta) / (2.0 * beta - 2.0)
              + a / std::numbers::sqrt2 * std::pow(s, 1.0 - 2.0 * beta) / (2.0 * beta - 1.0));
}

InterferenceResult interference_oracle_2d(const NetworkParams &params, double dx, double dy,
                                          int n)
{
    params.validate();
    detail::require_finite(dx, "dx");
    detail::require_finite(dy, "dy");
    if (n < 1)
        throw DomainError("interference_oracle_2d: n must be >= 1");

    const double beta = params.optics().beta;
    const double a = params.a;
    const double h2 = params.h * params.h;
    auto term = [&](int u, int v) {
        const double x = u * a + dx;
        const double y = v * a + dy;
        return std::pow(x * x + y * y + h2, -beta);
    };

    // outermost shell first so small terms accumulate before large ones
    detail::CompensatedSum sum;
    for (int s = n; s >= 1; --s) {
        for (int v = -s; v <= s; ++v) {
            sum.add(term(s, v));
            sum.add(term(-s, v));
        }
        for (int u = -s + 1; u <= s - 1; ++u) {
            sum.add(term(u, s));
            sum.add(term(u, -s));
        }
    }

    InterferenceResult r;
    r.value = sum.value();
    r.method = Method::oracle;
    r.terms_used = (2LL * n + 1) * (2LL * n + 1) - 1;
    const double tail = oracle_tail_bound_2d(params, dx, dy, n);
    if (std::isfinite(tail))
        r.error_envelope = tail;
    return r;
}

double spectral_weight_2d(int w, int k)
{
    return (w == 0 || k == 0) ? 0.5 : 1.0;
}

double g_term_2d(const NetworkParams &params, double dx, double dy, int w, int k)
{
    params.validate();
    detail::require_finite(dx, "dx");
    detail::require_finite(dy, "dy");
    if (w < 0 || k < 0 || (w == 0 && k == 0))
        throw DomainError("g_term_2d: requires w, k >= 0 and (w, k) != (0, 0)");

    const double c = detail::cos_2pi(w * dx / params.a) * detail::cos_2pi(k * dy / params.a);
    if (c == 0.0)
        return 0.0;
    const double beta = params.optics().beta;
    const double a = params.a;
    return 4.0 / (a * a) * q_full_2d(params.h, a, beta, w, k) * c;
}

double constant_term_2d(const NetworkParams &params)
{
    params.validate();
    const double beta = params.optics().beta;
    return std::pow(params.h, 2.0 - 2.0 * beta) * pi / (params.a * params.a * (beta - 1.0));
}

InterferenceResult closed_form_2d(const NetworkParams &params, double dx, double dy,
                                  const GridIndexSet &idx)
{
    params.validate();
    idx.validate();
    detail::require_finite(dx, "dx");
    detail::require_finite(dy, "dy");

    const double beta = params.optics().beta;
    detail::CompensatedSum sum;
    sum.add(constant_term_2d(params));
    sum.add(-self_term(dx, dy, params.h, beta));
    for (const auto &[w, k] : ordered_indices(idx))
        sum.add(spectral_weight_2d(w, k) * g_term_2d(params, dx, dy, w, k));

    InterferenceResult r;
    r.value = sum.value();
    r.method = Method::closed_form;
    r.terms_used = idx.size();
    r.error_envelope = error_diagnostics_2d(params, idx).envelope;
    return r;
}

ErrorDiagnostics error_diagnostics_2d(const NetworkParams &params, const GridIndexSet &idx)
{
    params.validate();
    idx.validate();
    const double beta = params.optics().beta;
    const double ratio = params.a / (2.0 * pi * params.h);
    const double r1 = std::hypot(static_cast<double>(idx.j), static_cast<double>(idx.l)) + 1.0;
    const double x = r1 / ratio;

    ErrorDiagnostics d;
    d.term_peak = ratio * (beta - 2.5);
    d.k_min_rule = static_cast<long long>(std::ceil(d.term_peak));
    d.envelope = std::exp((beta - 2.5) * std::log(r1) - x);
    d.tail_gamma_bound = std::pow(ratio, beta - 1.5) * upper_incomplete_gamma(beta - 1.5, x);
    return d;
}

GridIndexSet choose_jl_2d(const NetworkParams &params, double target_abs_error)
{
    if (!(target_abs_error > 0.0) || std::isnan(target_abs_error))
        throw DomainError("choose_jl_2d: target must be > 0");
    const long long rule = error_diagnostics_2d(params, {0, 0}).k_min_rule;
    for (int j = 0; j <= jl_cap; ++j) {
        const GridIndexSet idx{j, j};
        if (std::numbers::sqrt2 * j < static_cast<double>(rule))
            continue;
        if (error_diagnostics_2d(params, idx).tail_gamma_bound <= target_abs_error)
            return idx;
    }
    throw ConvergenceError("choose_jl_2d: target not reached within j = l <= 64");
}

double q00_fov_2d(const NetworkParams &params)
{
    params.validate();
    const double beta = params.optics().beta;
    const double full = std::pow(params.h, 2.0 - 2.0 * beta) * pi / (beta - 1.0);
    if (fov_unrestricted(params.theta_f))
        return full;
    return -full * std::expm1((2.0 * beta - 2.0) * std::log(std::cos(params.theta_f)));
}

double q_fov_2d(const NetworkParams &params, int w, int k, const QuadratureSpec &spec)
{
    params.validate();
    spec.validate();
    if (w < 0 || k < 0)
        throw DomainError("q_fov_2d: w and k must be >= 0");
    if (w == 0 && k == 0)
        return q00_fov_2d(params);

    const double beta = params.optics().beta;
    const double h = params.h;
    const double a = params.a;
    if (fov_unrestricted(params.theta_f))
        return q_full_2d(h, a, beta, w, k);

    const double scale = std::pow(h, 2.0 - 2.0 * beta);
    const double abs_tol = spec.abs_tol * scale;
    const double xcut =
        std::pow(0.01 * abs_tol * (2.0 * beta - 2.0) / (2.0 * pi), 1.0 / (2.0 - 2.0 * beta));
    const double r = std::min(fov_radius(h, params.theta_f), std::max(xcut, h));
    const double freq = 2.0 * pi * std::hypot(static_cast<double>(w), static_cast<double>(k)) / a;

    auto f = [=](double x) {
        return 2.0 * pi * bessel_j0(freq * x) * x * std::pow(x * x + h * h, -beta);
    };

    std::vector<double> edges{0.0};
    for (int n = 1;; ++n) {
        const double z = j0_zero(n) / freq;
        if (z >= r)
            break;
        edges.push_back(z);
    }
    edges.push_back(r);

    if (edges.size() < 5)
        return detail::integrate_geometric(f, h, r, spec, abs_tol);

    QuadratureSpec local = spec;
    local.abs_tol = abs_tol / static_cast<double>(edges.size() - 1);
    detail::CompensatedSum sum;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        sum.add(integrate(f, edges[i], edges[i + 1], local));
    return sum.value();
}

InterferenceResult interference_fov_2d(const NetworkParams &params, double dx, double dy,
                                       const GridIndexSet &idx, const QuadratureSpec &spec)
{
    params.validate();
    idx.validate();
    detail::require_finite(dx, "dx");
    detail::require_finite(dy, "dy");

    const double beta = params.optics().beta;
    const double a = params.a;
    detail::CompensatedSum sum;
    sum.add(q00_fov_2d(params));
    for (const auto &[w, k] : ordered_indices(idx)) {
        const double c = detail::cos_2pi(w * dx / a) * detail::cos_2pi(k * dy / a);
        if (c != 0.0)
            sum.add(4.0 * spectral_weight_2d(w, k) * q_fov_2d(params, w, k, spec) * c);
    }

    InterferenceResult r;
    r.value = sum.value() / (a * a);
    if (fov_indicator(std::hypot(dx, dy), params.h, params.theta_f))
        r.value -= self_term(dx, dy, params.h, beta);
    r.method = Method::fov_closed_form;
    r.terms_used = idx.size();
    return r;
}

InterferenceResult interference_fov_oracle_2d(const NetworkParams &params, double dx, double dy)
{
    params.validate();
    detail::require_finite(dx, "dx");
    detail::require_finite(dy, "dy");
    if (fov_unrestricted(params.theta_f))
        throw DomainError("interference_fov_oracle_2d: requires theta_f < pi/2");

    const double beta = params.optics().beta;
    const double a = params.a;
    const double h = params.h;
    const double t = fov_radius(h, params.theta_f);
    const double ulo = std::floor((-t - dx) / a) - 1.0, uhi = std::ceil((t - dx) / a) + 1.0;
    const double vlo = std::floor((-t - dy) / a) - 1.0, vhi = std::ceil((t - dy) / a) + 1.0;
    if ((uhi - ulo + 1.0) * (vhi - vlo + 1.0) > max_enumeration)
        throw DomainError("interference_fov_oracle_2d: field of view too wide to enumerate");

    detail::CompensatedSum sum;
    long long count = 0;
    for (long long u = static_cast<long long>(ulo); u <= static_cast<long long>(uhi); ++u) {
        for (long long v = static_cast<long long>(vlo); v <= static_cast<long long>(vhi); ++v) {
            if (u == 0 && v == 0)
                continue;
            const double x = u * a + dx;
            const double y = v * a + dy;
            if (!fov_indicator(std::hypot(x, y), h, params.theta_f))
                continue;
            sum.add(std::pow(x * x + y * y + h * h, -beta));
            ++count;
        }
    }

    InterferenceResult r;
    r.value = sum.value();
    r.method = Method::fov_oracle;
    r.terms_used = count;
    r.error_envelope = 0.0;
    return r;
}

} // namespace attocell
