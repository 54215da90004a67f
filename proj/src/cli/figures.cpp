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

#include "attocell/cli.hpp"
#include "attocell/field1d.hpp"
#include "attocell/field2d.hpp"

#include "cli/internal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace attocell::cli
{

namespace
{

constexpr double pi = std::numbers::pi;

struct Series
{
    Method method;
    int order = 0;  // n for the oracle, k in 1-D, j = l in 2-D
};

struct Point
{
    double x = 0.0;
    NetworkParams net;
    FieldPoint p;
    Series s;
};

InterferenceResult eval_1d(const Point &pt)
{
    switch (pt.s.method) {
    case Method::oracle: return interference_oracle_1d(pt.net, pt.p.dx, pt.s.order);
    case Method::closed_form: return closed_form_1d(pt.net, pt.p.dx, pt.s.order);
    case Method::fov_closed_form: return interference_fov_1d(pt.net, pt.p.dx, pt.s.order);
    case Method::fov_oracle: return interference_fov_oracle_1d(pt.net, pt.p.dx);
    }
    throw UsageError("unknown method");
}

InterferenceResult eval_2d(const Point &pt)
{
    const GridIndexSet jl{pt.s.order, pt.s.order};
    switch (pt.s.method) {
    case Method::oracle: return interference_oracle_2d(pt.net, pt.p.dx, pt.p.dy, pt.s.order);
    case Method::closed_form: return closed_form_2d(pt.net, pt.p.dx, pt.p.dy, jl);
    case Method::fov_closed_form: return interference_fov_2d(pt.net, pt.p.dx, pt.p.dy, jl);
    case Method::fov_oracle: return interference_fov_oracle_2d(pt.net, pt.p.dx, pt.p.dy);
    }
    throw UsageError("unknown method");
}

struct Figure
{
    FigureInfo info;
    bool two_d = false;
    std::string param;
    std::function<std::vector<Point>()> grid;
};

std::vector<Series> closed_and_oracles(std::initializer_list<int> windows)
{
    std::vector<Series> out{{Method::closed_form, 1}};
    for (int n : windows)
        out.push_back({Method::oracle, n});
    return out;
}

// Cartesian product of an abscissa grid with a list of series.
std::vector<Point> expand(const std::vector<Point> &grid, const std::vector<Series> &series)
{
    std::vector<Point> out;
    out.reserve(grid.size() * series.size());
    for (const Point &g : grid)
        for (const Series &s : series) {
            Point p = g;
            p.s = s;
            out.push_back(p);
        }
    return out;
}

const FieldPoint corner{0.25, 0.25};

const std::vector<Figure> &figures()
{
    static const std::vector<Figure> list = [] {
        std::vector<Figure> f;

        f.push_back({{"one-dim-interferer-count",
                      "n = 1..50; a = 0.5, h = 2.5, hpsa = pi/3, z = 0.25; oracle window n"},
                     false, "n", [] {
                         std::vector<Point> g;
                         for (int n = 1; n <= 50; ++n)
                             g.push_back({double(n), {}, {0.25, 0.0}, {Method::oracle, n}});
                         return g;
                     }});

        f.push_back({{"one-dim-a-sweep",
                      "a = 0.10..0.98 step 0.04; h = 2.5, hpsa = pi/3, z = a/2 (cell edge); "
                      "closed_form k = 1 and oracle n = 10, 20, 100, 200"},
                     false, "a", [] {
                         std::vector<Point> g;
                         for (int i = 0; i <= 22; ++i) {
                             Point p;
                             p.x = (10 + 4 * i) / 100.0;
                             p.net.a = p.x;
                             p.p = {p.x / 2.0, 0.0};
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({10, 20, 100, 200}));
                     }});

        f.push_back({{"one-dim-h-sweep",
                      "h = 2.5..5.0 step 0.1; a = 0.5, hpsa = pi/3, z = 0.25; "
                      "closed_form k = 1 and oracle n = 5, 10, 50, 100"},
                     false, "h", [] {
                         std::vector<Point> g;
                         for (int i = 0; i <= 25; ++i) {
                             Point p;
                             p.x = (25 + i) / 10.0;
                             p.net.h = p.x;
                             p.p = {0.25, 0.0};
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({5, 10, 50, 100}));
                     }});

        f.push_back({{"one-dim-hpsa-sweep",
                      "hpsa = (16+i) pi/192, i = 0..79; a = 0.5, h = 2.5, z = 0.25; "
                      "closed_form k = 1 and oracle n = 20, 50, 100, 200"},
                     false, "hpsa", [] {
                         std::vector<Point> g;
                         for (int i = 0; i <= 79; ++i) {
                             Point p;
                             p.x = (16 + i) * pi / 192.0;
                             p.net.theta_h = p.x;
                             p.p = {0.25, 0.0};
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({20, 50, 100, 200}));
                     }});

        f.push_back({{"one-dim-z-sweep",
                      "z in [0, 0.244] on the 23-point grid of the published data; a = 0.5, "
                      "h = 2.5, hpsa = pi/3; closed_form k = 1 and oracle n = 10, 50, 100, 200"},
                     false, "z", [] {
                         static constexpr int milli[] = {0,   11,  22,  33,  44,  55,  66,  77,
                                                         88,  99,  110, 122, 133, 144, 155, 166,
                                                         177, 188, 199, 211, 222, 233, 244};
                         std::vector<Point> g;
                         for (int m : milli) {
                             Point p;
                             p.x = m / 1000.0;
                             p.p = {p.x, 0.0};
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({10, 50, 100, 200}));
                     }});

        f.push_back({{"one-dim-fov-sweep",
                      "fov = j pi/216; a = 0.5, h = 2.5, hpsa = pi/3, z = 0; fov_oracle at odd "
                      "j = 1..105, fov_closed_form k = 10 at even j = 2..104"},
                     false, "fov", [] {
                         std::vector<Point> g;
                         for (int j = 1; j <= 105; ++j) {
                             Point p;
                             p.x = j * pi / 216.0;
                             p.net.theta_f = p.x;
                             p.p = {0.0, 0.0};
                             p.s = j % 2 == 1 ? Series{Method::fov_oracle, 0}
                                              : Series{Method::fov_closed_form, 10};
                             g.push_back(p);
                         }
                         return g;
                     }});

        f.push_back({{"two-dim-interferer-count",
                      "n = 1..100; a = 0.5, h = 2.5, hpsa = pi/3, (dx, dy) = (0.25, 0.25); "
                      "oracle square window n"},
                     true, "n", [] {
                         std::vector<Point> g;
                         for (int n = 1; n <= 100; ++n)
                             g.push_back({double(n), {}, corner, {Method::oracle, n}});
                         return g;
                     }});

        f.push_back({{"two-dim-a-sweep",
                      "a = 0.10..1.00 step 0.01; h = 2.5, hpsa = pi/3, (dx, dy) = (0, 0); "
                      "closed_form (j, l) = (1, 1) and oracle n = 10, 20, 100, 200"},
                     true, "a", [] {
                         std::vector<Point> g;
                         for (int i = 0; i <= 90; ++i) {
                             Point p;
                             p.x = (10 + i) / 100.0;
                             p.net.a = p.x;
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({10, 20, 100, 200}));
                     }});

        f.push_back({{"two-dim-h-sweep",
                      "h = 2.5..5.0 step 0.1; a = 0.5, hpsa = pi/3, (dx, dy) = (0.25, 0.25); "
                      "closed_form (1, 1) and oracle n = 40, 50, 100, 200"},
                     true, "h", [] {
                         std::vector<Point> g;
                         for (int i = 0; i <= 25; ++i) {
                             Point p;
                             p.x = (25 + i) / 10.0;
                             p.net.h = p.x;
                             p.p = corner;
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({40, 50, 100, 200}));
                     }});

        f.push_back({{"two-dim-hpsa-sweep",
                      "hpsa = (16+i) pi/192, i = 0..79; a = 0.5, h = 2.5, (dx, dy) = (0.25, 0.25); "
                      "closed_form (1, 1) and oracle n = 20, 50, 100, 200"},
                     true, "hpsa", [] {
                         std::vector<Point> g;
                         for (int i = 0; i <= 79; ++i) {
                             Point p;
                             p.x = (16 + i) * pi / 192.0;
                             p.net.theta_h = p.x;
                             p.p = corner;
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({20, 50, 100, 200}));
                     }});

        f.push_back({{"two-dim-z-sweep",
                      "diagonal dx = dy = i/100, i = 0..25, abscissa z = sqrt(dx^2 + dy^2); "
                      "a = 0.5, h = 2.5, hpsa = pi/3; closed_form (1, 1) and oracle "
                      "n = 40, 50, 100, 200"},
                     true, "z", [] {
                         std::vector<Point> g;
                         for (int i = 0; i <= 25; ++i) {
                             Point p;
                             const double d = i / 100.0;
                             p.x = i * std::numbers::sqrt2 / 100.0;
                             p.p = {d, d};
                             g.push_back(p);
                         }
                         return expand(g, closed_and_oracles({40, 50, 100, 200}));
                     }});

        f.push_back({{"two-dim-fov-sweep",
                      "fov = j pi/216; a = 0.5, h = 2.5, hpsa = pi/3, (dx, dy) = (0, 0); "
                      "fov_oracle at j = 1..13 and odd j = 15..105, fov_closed_form (1, 1) at "
                      "j = 1..14 and j = 17, 21, ..., 105"},
                     true, "fov", [] {
                         std::vector<Point> g;
                         for (int j = 1; j <= 105; ++j) {
                             Point p;
                             p.x = j * pi / 216.0;
                             p.net.theta_f = p.x;
                             if (j <= 13 || j % 2 == 1) {
                                 p.s = {Method::fov_oracle, 0};
                                 g.push_back(p);
                             }
                             if (j <= 14 || (j >= 17 && (j - 17) % 4 == 0)) {
                                 p.s = {Method::fov_closed_form, 1};
                                 g.push_back(p);
                             }
                         }
                         return g;
                     }});
        return f;
    }();
    return list;
}

} // namespace

const std::vector<FigureInfo> &figure_catalog()
{
    static const std::vector<FigureInfo> catalog = [] {
        std::vector<FigureInfo> out;
        for (const Figure &f : figures())
            out.push_back(f.info);
        return out;
    }();
    return catalog;
}

std::vector<SweepRow> cmd_figure(const std::string &id, int threads)
{
    const auto &list = figures();
    const auto it = std::find_if(list.begin(), list.end(),
                                 [&](const Figure &f) { return f.info.id == id; });
    if (it == list.end())
        throw UsageError("unknown figure id '" + id + "' (try --list)");
    if (threads < 1)
        throw UsageError("threads must be >= 1");

    const std::vector<Point> points = it->grid();
    std::vector<SweepRow> rows(points.size());
    const bool two_d = it->two_d;
    const std::string &param = it->param;
    detail::parallel_for(points.size(), threads, [&](std::size_t i) {
        const Point &pt = points[i];
        const InterferenceResult r = two_d ? eval_2d(pt) : eval_1d(pt);
        SweepRow row;
        row.sweep_param = param;
        row.sweep_value = pt.x;
        row.value = r.value;
        row.error_envelope = r.error_envelope;
        row.terms_used = r.terms_used;
        row.method = std::string(to_string(r.method));
        if (two_d)
            row.point = pt.p;
        rows[i] = row;
    });
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow &l, const SweepRow &r) { return l.sweep_value < r.sweep_value; });
    return rows;
}

} // namespace attocell::cli
