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

// End-to-end acceptance gate. One line per criterion; exit status is the
// number of failed criteria (capped at 1).

#include "attocell/cli.hpp"
#include "attocell/field1d.hpp"
#include "attocell/field2d.hpp"
#include "oracle.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace attocell;

namespace
{

constexpr double pi = std::numbers::pi;
constexpr int cases = 200;

// Collects the sub-checks of one criterion.
class Criterion
{
public:
    void expect(bool ok, const std::string &what)
    {
        if (!ok && failures_.size() < 4)
            failures_.push_back(what);
        ok_ = ok_ && ok;
    }

    void note(const std::string &text) { notes_.push_back(text); }

    bool ok() const { return ok_; }

    std::string detail() const
    {
        std::string out;
        for (const auto &f : failures_)
            out += (out.empty() ? "" : "; ") + f;
        for (const auto &n : notes_)
            out += (out.empty() ? "" : "; ") + n;
        return out;
    }

private:
    bool ok_ = true;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

bool close_rel(double got, double want, double rel)
{
    return std::abs(got - want) <= rel * std::abs(want);
}

void expect_rel(Criterion &c, const char *label, double got, double want, double rel)
{
    c.expect(close_rel(got, want, rel),
             std::string(label) + fmt(" got %.17g want %.17g rel %.1e", got, want, rel));
}

void expect_abs(Criterion &c, const char *label, double got, double want, double tol)
{
    c.expect(std::abs(got - want) <= tol,
             std::string(label) + fmt(" got %.17g want %.17g abs %.1e", got, want, tol));
}

NetworkParams reference_net()
{
    NetworkParams p;
    p.h = 2.5;
    p.a = 0.5;
    p.theta_h = pi / 3.0;
    return p;
}

void oracle_1d_goldens(Criterion &c)
{
    const NetworkParams p = reference_net();
    expect_rel(c, "n=1", interference_oracle_1d(p, 0.25, 1).value, 0.00109406162488395, 1e-9);
    expect_rel(c, "n=50", interference_oracle_1d(p, 0.25, 50).value, 0.00258720271348607, 1e-9);
}

void closed_form_1d_goldens(Criterion &c)
{
    const NetworkParams p = reference_net();
    const double cf = closed_form_1d(p, 0.25, 1).value;
    expect_abs(c, "k=1", cf, 0.00258720279835122, 1e-8);
    const double ref = interference_oracle_1d(p, 0.25, 500).value;
    c.expect(std::abs(cf - ref) <= 1e-10, fmt("|I1 - I500| = %.3e > 1e-10", std::abs(cf - ref)));
}

void constant_terms(Criterion &c)
{
    const NetworkParams p = reference_net();
    expect_rel(c, "1-D", constant_term_1d(p), 0.00321699087727595, 1e-10);
    expect_rel(c, "2-D", constant_term_2d(p), 0.0171572846788051, 1e-10);
}

void oracle_2d_goldens(Criterion &c)
{
    const NetworkParams p = reference_net();
    expect_rel(c, "n=1", interference_oracle_2d(p, 0.25, 0.25, 1).value, 0.003944860204854, 1e-9);
    expect_rel(c, "n=100", interference_oracle_2d(p, 0.25, 0.25, 100).value, 0.016551833182614, 1e-9);
}

void closed_form_2d_goldens(Criterion &c)
{
    const NetworkParams p = reference_net();
    expect_abs(c, "(0,0)", closed_form_2d(p, 0.0, 0.0, {1, 1}).value, 0.0165019246788051, 1e-8);
    expect_abs(c, "(a/2,a/2)", closed_form_2d(p, 0.25, 0.25, {1, 1}).value, 0.0165518333404043, 1e-8);
}

// The published step curve is reproduced by the closed form at k = 10.
// Interiors: T = h tan(theta_f) at least a/4 away from every lattice distance.
void fov_1d_steps(Criterion &c)
{
    NetworkParams p = reference_net();
    const double a = p.a, h = p.h;
    const double theta_o = std::atan(a / h);
    c.expect(std::abs(theta_o - 0.197) < 5e-4, fmt("theta_o = %.6f", theta_o));

    struct Plateau
    {
        double lo, hi, value;
    };
    const Plateau plateaus[] = {{0.0, a, 0.0}, {a, 2 * a, 0.00112041}, {2 * a, 3 * a, 0.00184431}};
    double worst_oracle = 0.0, worst_closed = 0.0, worst_t = 0.0;
    constexpr int samples = 200;
    for (const Plateau &pl : plateaus) {
        for (int i = 0; i <= samples; ++i) {
            // oracle: the whole open plateau
            const double t_all = pl.lo + (pl.hi - pl.lo) * (i + 0.5) / (samples + 1);
            p.theta_f = std::atan(t_all / h);
            worst_oracle = std::max(worst_oracle, std::abs(interference_fov_oracle_1d(p, 0.0).value - pl.value));

            const double t = pl.lo + a / 4 + (pl.hi - pl.lo - a / 2) * i / samples;
            p.theta_f = std::atan(t / h);
            const double diff = std::abs(interference_fov_1d(p, 0.0, 10).value
                                         - interference_fov_oracle_1d(p, 0.0).value);
            if (diff > worst_closed) {
                worst_closed = diff;
                worst_t = p.theta_f;
            }
        }
    }
    c.expect(worst_oracle <= 1e-6, fmt("oracle plateau deviation %.3e > 1e-6", worst_oracle));
    c.expect(worst_closed <= 2e-5,
             fmt("closed form k=10 deviates %.3e > 2e-5 at theta_f=%.4f", worst_closed, worst_t));

    p.theta_f = 1.5707;
    expect_abs(c, "theta_f=1.5707", interference_fov_1d(p, 0.0, 10).value, 0.00256163, 1e-5);
}

void fov_2d(Criterion &c)
{
    NetworkParams p = reference_net();
    const double beta = p.optics().beta;
    const double h = p.h;
    for (int i = 1; i <= 40; ++i) {
        p.theta_f = 1.55 * i / 40.0;
        const double t = h * std::tan(p.theta_f);
        const double anti = pi / (beta - 1.0)
                            * (std::pow(h, 2.0 - 2.0 * beta) - std::pow(t * t + h * h, 1.0 - beta));
        c.expect(std::abs(q00_fov_2d(p) - anti) <= 1e-12 * std::abs(anti),
                 fmt("Q'(0,0) at theta_f=%.4f: %.17g vs %.17g", p.theta_f, q00_fov_2d(p), anti));
    }

    p.theta_f = 1.5707;
    expect_abs(c, "theta_f=1.5707", interference_fov_2d(p, 0.0, 0.0, {1, 1}).value, 0.0165019, 1e-4);

    const double theta_o = std::atan(p.a / h);
    for (int i = 1; i < 100; ++i) {
        p.theta_f = theta_o * i / 100.0;
        const double v = interference_fov_oracle_2d(p, 0.0, 0.0).value;
        c.expect(v == 0.0, fmt("oracle %.3e at theta_f=%.5f below theta_o", v, p.theta_f));
    }
    p.theta_f = theta_o * 1.001;
    c.expect(interference_fov_oracle_2d(p, 0.0, 0.0).value > 0.0, "no interference just above theta_o");
}

void envelope_decay(Criterion &c)
{
    const NetworkParams p = reference_net();
    const double z = p.a / 4;
    const double ref = interference_oracle_1d(p, z, 500).value;
    const double e = std::exp(-2.0 * pi * p.h / p.a);
    double err[4];
    for (int k = 1; k <= 3; ++k)
        err[k] = std::abs(closed_form_1d(p, z, k).value - ref);
    for (int k = 1; k < 3; ++k) {
        const double ratio = err[k] == 0.0 ? 0.0 : err[k + 1] / err[k];
        c.expect(ratio >= e / 10 && ratio <= 10 * e,
                 fmt("ratio k=%.0f->%.0f is %.3e", k, k + 1, ratio));
    }
    c.note(fmt("errors k=1..3: %.3e %.3e %.3e", err[1], err[2], err[3]));
    c.note(fmt("allowed ratio [%.3e, %.3e]", e / 10, 10 * e));
}

void invariants(Criterion &c)
{
    oracle::Rng rng(4242);
    auto net = [&] {
        NetworkParams p;
        p.a = rng.uniform(0.2, 1.0);
        p.h = rng.uniform(0.8, 5.0);
        p.theta_h = rng.uniform(0.4, 1.4);
        return p;
    };
    int bad[5] = {};
    for (int i = 0; i < cases; ++i) {
        // periodicity of the closed form with the self term restored
        {
            const NetworkParams p = net();
            const double beta = p.optics().beta;
            const int k = rng.integer(0, 6);
            const double z = rng.uniform(-p.a, 0.0);
            auto full = [&](double x) { return closed_form_1d(p, x, k).value + std::pow(x * x + p.h * p.h, -beta); };
            const double l = full(z), r = full(z + p.a);
            if (std::abs(l - r) > 1e-12 * std::max(1.0, std::abs(l)))
                ++bad[0];
            const double dy = rng.uniform(-p.a, 0.0);
            const GridIndexSet idx{rng.integer(0, 4), rng.integer(0, 4)};
            auto full2 = [&](double x, double y) {
                return closed_form_2d(p, x, y, idx).value + std::pow(x * x + y * y + p.h * p.h, -beta);
            };
            const double b = full2(z, dy);
            if (std::abs(b - full2(z + p.a, dy)) > 1e-12 * std::max(1.0, std::abs(b))
                || std::abs(b - full2(z, dy + p.a)) > 1e-12 * std::max(1.0, std::abs(b)))
                ++bad[0];
        }
        // evenness
        {
            const NetworkParams p = net();
            const double z = rng.uniform(-p.a, p.a);
            const int k = rng.integer(0, 5);
            const int n = rng.integer(1, 80);
            if (closed_form_1d(p, z, k).value != closed_form_1d(p, -z, k).value
                || interference_oracle_1d(p, z, n).value != interference_oracle_1d(p, -z, n).value)
                ++bad[1];
        }
        // monotone in the window
        {
            const NetworkParams p = net();
            const double z = rng.uniform(-p.a / 2, p.a / 2);
            const double dy = rng.uniform(-p.a / 2, p.a / 2);
            const int n = rng.integer(1, 60);
            const int m = rng.integer(1, 12);
            if (interference_oracle_1d(p, z, n + 1).value < interference_oracle_1d(p, z, n).value
                || interference_oracle_2d(p, z, dy, m + 1).value < interference_oracle_2d(p, z, dy, m).value)
                ++bad[2];
        }
        // half-integer Bessel K
        {
            const double nu = rng.integer(0, 3) + 0.5;
            const double x = rng.uniform(0.5, 40.0);
            const double want = oracle::bessel_k_half(static_cast<int>(nu), x);
            if (!close_rel(bessel_k(nu, x), want, 1e-9))
                ++bad[3];
        }
        // hypergeometric closed form against quadrature
        {
            NetworkParams p = net();
            p.theta_f = rng.uniform(0.02, 1.55);
            const double beta = p.optics().beta;
            const double h = p.h;
            const double t = h * std::tan(p.theta_f);
            auto f = [=](double x) { return std::pow(x * x + h * h, -beta); };
            const double scale = std::pow(h, 1.0 - 2.0 * beta);
            const double quad = integrate(f, -t, t, {1e-14 * scale, 1e-13, 50});
            if (!close_rel(q0_fov_1d(p), quad, 1e-11))
                ++bad[4];
        }
    }
    const char *names[5] = {"periodicity", "evenness", "monotone in n", "half-integer K", "hypergeometric duality"};
    for (int i = 0; i < 5; ++i)
        c.expect(bad[i] == 0, std::string(names[i]) + ": " + std::to_string(bad[i]) + " of 200 cases failed");
}

std::string figure_csv(const std::string &id, int threads)
{
    std::ostringstream os;
    cli::write_csv(os, cli::cmd_figure(id, threads));
    return os.str();
}

void determinism(Criterion &c)
{
    for (const auto &fig : cli::figure_catalog()) {
        const std::string first = figure_csv(fig.id, 1);
        c.expect(!first.empty(), fig.id + ": empty output");
        c.expect(first == figure_csv(fig.id, 1), fig.id + ": repeat run differs");
        c.expect(first == figure_csv(fig.id, 4), fig.id + ": 4 threads differ from 1");
    }
}

} // namespace

int main()
{
    struct Entry
    {
        const char *name;
        std::function<void(Criterion &)> run;
    };
    const Entry entries[] = {
        {"1-D oracle golden values", oracle_1d_goldens},
        {"1-D closed form golden value and oracle agreement", closed_form_1d_goldens},
        {"constant terms", constant_terms},
        {"2-D oracle golden values", oracle_2d_goldens},
        {"2-D closed form golden values", closed_form_2d_goldens},
        {"1-D field-of-view steps", fov_1d_steps},
        {"2-D field-of-view", fov_2d},
        {"truncation error decay per order", envelope_decay},
        {"randomised invariants", invariants},
        {"figure determinism", determinism},
    };

    int failed = 0;
    for (const Entry &e : entries) {
        Criterion c;
        try {
            e.run(c);
        } catch (const std::exception &ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        failed += c.ok() ? 0 : 1;
        const std::string detail = c.detail();
        std::printf("%s  %s%s%s\n", c.ok() ? "PASS" : "FAIL", e.name, detail.empty() ? "" : "  -- ",
                    detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(entries)) - failed,
                std::size(entries));
    return failed == 0 ? 0 : 1;
}
