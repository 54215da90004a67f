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

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace attocell
{

namespace
{

// Kronrod abscissae; odd indices are the embedded Gauss points.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int max_intervals = 50000;

struct Piece
{
    double a;
    double b;
    double result;
    double error;
    int depth;
};

struct ByError
{
    bool operator()(const Piece &l, const Piece &r) const
    {
        if (l.error != r.error)
            return l.error < r.error;
        return l.a > r.a;
    }
};

Piece gk15(const std::function<double(double)> &f, double a, double b, int depth)
{
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double fc = f(centr);
    double resg = fc * wg[3];
    double resk = fc * wgk[7];
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];

    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * xgk[j];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += wgk[j] * (f1 + f2);
        resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1)
            resg += wg[j / 2] * (f1 + f2);
    }

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double result = resk * hlgth;
    resabs *= std::abs(hlgth);
    resasc *= std::abs(hlgth);
    double err = std::abs((resk - resg) * hlgth);

    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > uflow / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);

    if (!std::isfinite(result))
        throw ConvergenceError("integrate: integrand is not finite on the interval");

    return {a, b, result, err, depth};
}

} // namespace

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_depth < 1)
        throw DomainError("QuadratureSpec: abs_tol, rel_tol must be > 0 and max_depth >= 1");
}

QuadratureResult integrate_detailed(const std::function<double(double)> &f, double lo,
                                    double hi, const QuadratureSpec &spec)
{
    spec.validate();
    if (!(lo <= hi))
        throw DomainError("integrate: requires lo <= hi");
    if (lo == hi)
        return {0.0, 0.0, 0};

    std::priority_queue<Piece, std::vector<Piece>, ByError> open;
    std::vector<Piece> frozen;
    int evaluations = 15;

    Piece first = gk15(f, lo, hi, 0);
    double total = first.result;
    double total_err = first.error;
    double frozen_err = 0.0;
    open.push(first);

    while (true) {
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
        if (total_err <= tol)
            break;
        if (open.empty() || frozen_err > tol)
            throw ConvergenceError("integrate: max_depth reached without meeting tolerance");
        if (static_cast<int>(open.size() + frozen.size()) >= max_intervals)
            throw ConvergenceError("integrate: interval budget exhausted");

        Piece worst = open.top();
        open.pop();
        if (worst.depth >= spec.max_depth) {
            frozen.push_back(worst);
            frozen_err += worst.error;
            continue;
        }

        const double mid = 0.5 * (worst.a + worst.b);
        Piece left = gk15(f, worst.a, mid, worst.depth + 1);
        Piece right = gk15(f, mid, worst.b, worst.depth + 1);
        evaluations += 30;

        total += left.result + right.result - worst.result;
        total_err += left.error + right.error - worst.error;
        open.push(left);
        open.push(right);
    }

    // Re-add in a fixed order so the result does not carry running-sum drift.
    std::vector<Piece> all = std::move(frozen);
    while (!open.empty()) {
        all.push_back(open.top());
        open.pop();
    }
    std::sort(all.begin(), all.end(), [](const Piece &l, const Piece &r) { return l.a < r.a; });

    double sum = 0.0, comp = 0.0, err = 0.0;
    for (const Piece &p : all) {
        const double t = sum + p.result;
        if (std::abs(sum) >= std::abs(p.result))
            comp += (sum - t) + p.result;
        else
            comp += (p.result - t) + sum;
        sum = t;
        err += p.error;
    }
    return {sum + comp, err, evaluations};
}

double integrate(const std::function<double(double)> &f, double lo, double hi,
                 const QuadratureSpec &spec)
{
    return integrate_detailed(f, lo, hi, spec).value;
}

} // namespace attocell
