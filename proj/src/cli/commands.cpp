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

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

namespace attocell::cli
{

namespace
{

struct Job
{
    NetworkParams net;
    FieldPoint point;
    std::string param;
    double x = 0.0;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<GridIndexSet> jl;
};

int integral_value(const std::string &param, double x)
{
    const double r = std::nearbyint(x);
    if (std::abs(x - r) > 1e-9 || r < 0.0 || r > 1e8)
        throw UsageError("sweep over " + param + " needs non-negative integer grid points");
    return static_cast<int>(r);
}

std::vector<Job> build_jobs(const ScenarioConfig &c)
{
    const bool one_d = c.model == Model::one_d;
    std::vector<Job> jobs;

    if (!c.sweep) {
        std::vector<FieldPoint> points = c.positions;
        if (points.empty())
            points.push_back({0.25, one_d ? 0.0 : 0.25});
        if (one_d)
            std::stable_sort(points.begin(), points.end(),
                             [](const FieldPoint &l, const FieldPoint &r) { return l.dx < r.dx; });
        for (std::size_t i = 0; i < points.size(); ++i) {
            Job job;
            job.net = c.net;
            job.point = points[i];
            job.param = one_d ? "z" : "point";
            job.x = one_d ? points[i].dx : static_cast<double>(i);
            jobs.push_back(job);
        }
        return jobs;
    }

    const SweepSpec &s = *c.sweep;
    FieldPoint base = c.positions.empty() ? FieldPoint{0.25, one_d ? 0.0 : 0.25} : c.positions.front();
    for (double x : s.values()) {
        Job job;
        job.net = c.net;
        job.point = base;
        job.param = s.param;
        job.x = x;
        if (s.param == "z") {
            if (one_d)
                job.point = {x, 0.0};
            else
                job.point = {x / std::numbers::sqrt2, x / std::numbers::sqrt2};
        } else if (s.param == "dx") {
            job.point.dx = x;
        } else if (s.param == "dy") {
            job.point.dy = x;
        } else if (s.param == "h") {
            job.net.h = x;
        } else if (s.param == "a") {
            job.net.a = x;
        } else if (s.param == "hpsa") {
            job.net.theta_h = x;
        } else if (s.param == "fov") {
            job.net.theta_f = x;
        } else if (s.param == "n") {
            job.n = integral_value(s.param, x);
            if (*job.n < 1)
                throw UsageError("sweep over n needs n >= 1");
        } else if (s.param == "k") {
            job.k = integral_value(s.param, x);
        } else if (s.param == "j") {
            const int j = integral_value(s.param, x);
            job.jl = GridIndexSet{j, j};
        }
        jobs.push_back(job);
    }
    return jobs;
}

InterferenceOrder resolve_order(const ScenarioConfig &c, const Job &job, Method method)
{
    InterferenceOrder order;
    if (method == Method::oracle) {
        order.n = job.n.value_or(c.n.value_or(100));
        return order;
    }
    if (method == Method::fov_oracle)
        return order;
    if (c.model == Model::one_d) {
        if (job.k || c.k) {
            order.k = job.k ? *job.k : *c.k;
        } else {
            order.k = choose_k_1d(job.net, c.target);
        }
    } else {
        if (job.jl)
            order.jl = *job.jl;
        else if (c.jl)
            order.jl = *c.jl;
        else
            order.jl = choose_jl_2d(job.net, c.target);
    }
    return order;
}

InterferenceResult evaluate(const ScenarioConfig &c, const Job &job, Method method,
                            const InterferenceOrder &order)
{
    job.net.validate();
    const double dx = job.point.dx;
    const double dy = job.point.dy;
    if (c.model == Model::one_d) {
        switch (method) {
        case Method::oracle: return interference_oracle_1d(job.net, dx, order.n);
        case Method::closed_form: return closed_form_1d(job.net, dx, order.k);
        case Method::fov_closed_form: return interference_fov_1d(job.net, dx, order.k, c.quadrature);
        case Method::fov_oracle: return interference_fov_oracle_1d(job.net, dx);
        }
    } else {
        switch (method) {
        case Method::oracle: return interference_oracle_2d(job.net, dx, dy, order.n);
        case Method::closed_form: return closed_form_2d(job.net, dx, dy, order.jl);
        case Method::fov_closed_form:
            return interference_fov_2d(job.net, dx, dy, order.jl, c.quadrature);
        case Method::fov_oracle: return interference_fov_oracle_2d(job.net, dx, dy);
        }
    }
    throw UsageError("unknown method");
}

SweepRow base_row(const ScenarioConfig &c, const Job &job)
{
    SweepRow row;
    row.sweep_param = job.param;
    row.sweep_value = job.x;
    if (c.model == Model::two_d)
        row.point = job.point;
    return row;
}

template <class Fn>
std::vector<SweepRow> run_jobs(const ScenarioConfig &c, Fn fn)
{
    const std::vector<Job> jobs = build_jobs(c);
    std::vector<SweepRow> rows(jobs.size());
    detail::parallel_for(jobs.size(), c.threads, [&](std::size_t i) { rows[i] = fn(jobs[i]); });
    return rows;
}

} // namespace

std::vector<SweepRow> cmd_interference(const ScenarioConfig &config)
{
    config.validate();
    return run_jobs(config, [&](const Job &job) {
        const InterferenceResult r = evaluate(config, job, config.method,
                                              resolve_order(config, job, config.method));
        SweepRow row = base_row(config, job);
        row.value = r.value;
        row.error_envelope = r.error_envelope;
        row.terms_used = r.terms_used;
        row.method = std::string(to_string(r.method));
        return row;
    });
}

std::vector<SweepRow> cmd_sinr(const ScenarioConfig &config)
{
    config.validate();
    return run_jobs(config, [&](const Job &job) {
        job.net.validate();
        const InterferenceOrder order = resolve_order(config, job, config.method);
        const SinrResult s =
            config.model == Model::one_d
                ? sinr_1d(job.net, config.noise, job.point.dx, config.method, order, config.quadrature)
                : sinr_2d(job.net, config.noise, job.point.dx, job.point.dy, config.method, order,
                          config.quadrature);
        SweepRow row = base_row(config, job);
        row.value = s.sinr_linear;
        row.terms_used = s.interference.terms_used;
        row.method = std::string(to_string(s.interference.method));
        row.sinr = s;
        return row;
    });
}

std::vector<SweepRow> cmd_validate(const ScenarioConfig &config, int n_ref, double tolerance)
{
    config.validate();
    if (config.method == Method::oracle || config.method == Method::fov_oracle)
        throw UsageError("validate compares an oracle against a closed form; pick a closed-form method");
    if (n_ref < 1)
        throw UsageError("n-ref must be >= 1");
    if (!(tolerance >= 0.0))
        throw UsageError("tolerance must be >= 0");

    return run_jobs(config, [&](const Job &job) {
        const bool fov = !fov_unrestricted(job.net.theta_f);
        const Method approx_method = fov ? Method::fov_closed_form : Method::closed_form;
        const Method ref_method = fov ? Method::fov_oracle : Method::oracle;
        InterferenceOrder ref_order;
        ref_order.n = n_ref;
        const InterferenceResult ref = evaluate(config, job, ref_method, ref_order);
        const InterferenceResult approx =
            evaluate(config, job, approx_method, resolve_order(config, job, approx_method));

        SweepRow row = base_row(config, job);
        row.value = std::abs(ref.value - approx.value);
        row.error_envelope = approx.error_envelope;
        row.terms_used = approx.terms_used;
        row.method = std::string(to_string(approx.method));
        row.pass = row.value <= tolerance;
        return row;
    });
}

namespace
{

struct Flags
{
    std::string config;
    std::string model;
    double h = 0, a = 0, hpsa = 0, fov = 0;
    double A_pd = 0, R_pd = 0, P_o = 0, N0 = 0, W = 0, T = 0;
    std::vector<double> z;
    double dx = 0, dy = 0;
    std::string method;
    int n = 0, k = 0;
    std::string jl;
    std::string sweep;
    std::string out;
    std::string format;
    bool degrees = false;
    int threads = 1;
    double target = 0;
    double tol = 1e-8;
    int n_ref = 0;
    double abs_tol = 0, rel_tol = 0;
    int max_depth = 0;
};

struct Options
{
    std::map<std::string, CLI::Option *> opt;

    bool given(const std::string &name) const
    {
        auto it = opt.find(name);
        return it != opt.end() && it->second->count() > 0;
    }
};

void add_scenario_options(CLI::App *app, Flags &f, Options &o)
{
    app->set_help_flag("--help", "print this help and exit");
    o.opt["config"] = app->add_option("--config", f.config, "JSON scenario file; flags override it");
    o.opt["model"] = app->add_option("--model", f.model, "1d or 2d (default 1d)")
                         ->check(CLI::IsMember({"1d", "2d"}));
    o.opt["h"] = app->add_option("--h", f.h, "LED height [m] (default 2.5)");
    o.opt["a"] = app->add_option("--a", f.a, "LED spacing [m] (default 0.5)");
    o.opt["hpsa"] = app->add_option("--hpsa", f.hpsa, "half-power semi-angle [rad] (default pi/3)");
    o.opt["fov"] = app->add_option("--fov", f.fov, "receiver field of view [rad] (default pi/2)");
    o.opt["A_pd"] = app->add_option("--A-pd", f.A_pd, "photodiode area [m^2] (default 1e-4)");
    o.opt["R_pd"] = app->add_option("--R-pd", f.R_pd, "responsivity [A/W] (default 0.1)");
    o.opt["P_o"] = app->add_option("--P-o", f.P_o, "optical power [W] (default 1)");
    o.opt["N0"] = app->add_option("--N0", f.N0, "noise spectral density (default 4.14e-21)");
    o.opt["W"] = app->add_option("--W", f.W, "bandwidth [Hz] (default 4e7)");
    o.opt["T"] = app->add_option("--T", f.T, "temperature [K] (default 300)");
    o.opt["z"] = app->add_option("--z", f.z, "1d receiver offset [m]; repeat for several points");
    o.opt["dx"] = app->add_option("--dx", f.dx, "2d offset along x [m]");
    o.opt["dy"] = app->add_option("--dy", f.dy, "2d offset along y [m]");
    o.opt["method"] = app->add_option("--method", f.method,
                                      "oracle, closed_form, fov_closed_form or fov_oracle");
    o.opt["n"] = app->add_option("--n", f.n, "oracle window (default 100)");
    o.opt["k"] = app->add_option("--k", f.k, "1d spectral order (default: chosen from --target)");
    o.opt["jl"] = app->add_option("--jl", f.jl, "2d spectral index set J,L (default: chosen from --target)");
    o.opt["sweep"] = app->add_option("--sweep", f.sweep,
                                     "PARAM:LO:HI:STEP with PARAM in z,dx,dy,h,a,hpsa,fov,n,k,j");
    o.opt["out"] = app->add_option("--out", f.out, "output file (default stdout)");
    o.opt["format"] = app->add_option("--format", f.format, "csv or json (default csv)")
                          ->check(CLI::IsMember({"csv", "json"}));
    o.opt["degrees"] = app->add_flag("--degrees", f.degrees, "angles given in degrees");
    o.opt["threads"] = app->add_option("--threads", f.threads, "worker threads (default 1)");
    o.opt["target"] = app->add_option("--target", f.target,
                                      "absolute truncation target for automatic orders (default 1e-12)");
    o.opt["abs_tol"] = app->add_option("--abs-tol", f.abs_tol, "quadrature absolute tolerance");
    o.opt["rel_tol"] = app->add_option("--rel-tol", f.rel_tol, "quadrature relative tolerance");
    o.opt["max_depth"] = app->add_option("--max-depth", f.max_depth, "quadrature bisection depth");
}

SweepSpec parse_sweep(const std::string &text)
{
    std::stringstream ss(text);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ':'))
        parts.push_back(part);
    if (parts.size() != 4)
        throw UsageError("--sweep expects PARAM:LO:HI:STEP");
    try {
        std::size_t used = 0;
        SweepSpec s{parts[0], 0, 0, 0};
        double *dst[3] = {&s.lo, &s.hi, &s.step};
        for (int i = 0; i < 3; ++i) {
            *dst[i] = std::stod(parts[i + 1], &used);
            if (used != parts[i + 1].size())
                throw std::invalid_argument("trailing");
        }
        return s;
    } catch (const std::exception &) {
        throw UsageError("--sweep bounds must be numbers");
    }
}

GridIndexSet parse_jl(const std::string &text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--jl expects J,L");
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string js = text.substr(0, comma), ls = text.substr(comma + 1);
        const int j = std::stoi(js, &u1);
        const int l = std::stoi(ls, &u2);
        if (u1 != js.size() || u2 != ls.size())
            throw std::invalid_argument("trailing");
        return {j, l};
    } catch (const std::exception &) {
        throw UsageError("--jl expects two integers J,L");
    }
}

ScenarioConfig build_config(const Flags &f, const Options &o)
{
    ScenarioConfig c;
    const double angle = f.degrees ? std::numbers::pi / 180.0 : 1.0;

    if (o.given("model"))
        c.model = f.model == "2d" ? Model::two_d : Model::one_d;
    if (o.given("config"))
        detail::load_config_file(f.config, c, f.degrees);
    if (o.given("model"))
        c.model = f.model == "2d" ? Model::two_d : Model::one_d;

    if (o.given("h")) c.net.h = f.h;
    if (o.given("a")) c.net.a = f.a;
    if (o.given("hpsa")) c.net.theta_h = f.hpsa * angle;
    if (o.given("fov")) c.net.theta_f = f.fov * angle;
    if (o.given("A_pd")) c.net.A_pd = f.A_pd;
    if (o.given("R_pd")) c.net.R_pd = f.R_pd;
    if (o.given("P_o")) c.net.P_o = f.P_o;
    if (o.given("N0")) c.noise.N0 = f.N0;
    if (o.given("W")) c.noise.W = f.W;
    if (o.given("T")) c.noise.T = f.T;
    if (o.given("abs_tol")) c.quadrature.abs_tol = f.abs_tol;
    if (o.given("rel_tol")) c.quadrature.rel_tol = f.rel_tol;
    if (o.given("max_depth")) c.quadrature.max_depth = f.max_depth;

    const bool point_flags = o.given("z") || o.given("dx") || o.given("dy");
    if (point_flags) {
        c.positions.clear();
        if (c.model == Model::one_d) {
            if (o.given("dx") || o.given("dy"))
                throw UsageError("--dx/--dy need --model 2d; use --z for 1d");
            for (double z : f.z)
                c.positions.push_back({z, 0.0});
        } else {
            if (o.given("z")) {
                if (o.given("dx") || o.given("dy") || f.z.size() != 1)
                    throw UsageError("2d takes either one --z (diagonal) or --dx/--dy");
                const double d = f.z.front() / std::numbers::sqrt2;
                c.positions.push_back({d, d});
            } else {
                c.positions.push_back({f.dx, f.dy});
            }
        }
    }

    if (o.given("method")) {
        try {
            c.method = method_from_string(f.method);
        } catch (const DomainError &e) {
            throw UsageError(e.what());
        }
    }
    if (o.given("n")) c.n = f.n;
    if (o.given("k")) c.k = f.k;
    if (o.given("jl")) c.jl = parse_jl(f.jl);
    if (o.given("sweep")) {
        SweepSpec s = parse_sweep(f.sweep);
        if (detail::is_angle_param(s.param)) {
            s.lo *= angle;
            s.hi *= angle;
            s.step *= angle;
        }
        c.sweep = s;
    }
    if (o.given("out")) c.out = f.out;
    if (o.given("format")) c.format = f.format == "json" ? Format::json : Format::csv;
    if (o.given("threads")) c.threads = f.threads;
    if (o.given("target")) c.target = f.target;
    return c;
}

void emit(const std::vector<SweepRow> &rows, const std::string &command, Format format,
          const std::string &path, std::ostream &out)
{
    auto write = [&](std::ostream &os) {
        if (format == Format::json)
            write_json(os, command, rows);
        else
            write_csv(os, rows);
    };
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open output file '" + path + "'");
    write(file);
    if (!file)
        throw UsageError("failed writing '" + path + "'");
}

std::string figure_help()
{
    std::string s = "Figure ids and the parameter sets they reproduce:\n";
    for (const FigureInfo &f : figure_catalog())
        s += "  " + f.id + "\n      " + f.binding + "\n";
    return s;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"attocell: co-channel interference and SINR in 1-D and 2-D Li-Fi LED lattices"};
    app.name("attocell");
    app.set_help_flag("-h,--help", "print this help and exit");
    app.require_subcommand(1);

    Flags f;
    Options oi, os, ov;
    CLI::App *interference = app.add_subcommand("interference", "normalised interference per point");
    add_scenario_options(interference, f, oi);
    CLI::App *sinr = app.add_subcommand("sinr", "SINR per point (value column is linear)");
    add_scenario_options(sinr, f, os);
    CLI::App *validate =
        app.add_subcommand("validate", "|oracle - closed form| per point against a tolerance");
    add_scenario_options(validate, f, ov);
    validate->add_option("--tol", f.tol, "absolute tolerance (default 1e-8)");
    CLI::Option *n_ref_opt =
        validate->add_option("--n-ref", f.n_ref, "oracle window (default 500 in 1d, 60 in 2d)");

    std::string figure_id;
    std::string figure_out;
    std::string figure_format = "csv";
    bool list = false;
    int figure_threads = 1;
    CLI::App *figure = app.add_subcommand("figure", "regenerate the data series behind a figure");
    figure->add_option("id", figure_id, "figure id (see --list)");
    figure->add_flag("--list", list, "print the figure ids and exit");
    figure->add_option("--out", figure_out, "output file (default stdout)");
    figure->add_option("--format", figure_format, "csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    figure->add_option("--threads", figure_threads, "worker threads (default 1)");
    figure->footer(figure_help());

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*figure) {
            if (list) {
                for (const FigureInfo &info : figure_catalog())
                    out << info.id << '\n';
                return exit_ok;
            }
            if (figure_id.empty())
                throw UsageError("figure: missing id (try --list)");
            if (figure_threads < 1)
                throw UsageError("threads must be >= 1");
            const auto rows = cmd_figure(figure_id, figure_threads);
            emit(rows, "figure", figure_format == "json" ? Format::json : Format::csv, figure_out, out);
            return exit_ok;
        }

        if (*interference) {
            const ScenarioConfig c = build_config(f, oi);
            emit(cmd_interference(c), "interference", c.format, c.out, out);
            return exit_ok;
        }
        if (*sinr) {
            const ScenarioConfig c = build_config(f, os);
            emit(cmd_sinr(c), "sinr", c.format, c.out, out);
            return exit_ok;
        }

        const ScenarioConfig c = build_config(f, ov);
        const int n_ref = n_ref_opt->count() > 0 ? f.n_ref : (c.model == Model::one_d ? 500 : 60);
        const auto rows = cmd_validate(c, n_ref, f.tol);
        emit(rows, "validate", c.format, c.out, out);
        std::size_t failed = 0;
        for (const SweepRow &r : rows) {
            const bool ok = r.pass.value_or(false);
            failed += ok ? 0 : 1;
            err << (ok ? "PASS " : "FAIL ") << r.sweep_param << '=' << format_double(r.sweep_value)
                << " error=" << format_double(r.value) << '\n';
        }
        err << (failed == 0 ? "PASS" : "FAIL") << ": " << rows.size() - failed << '/' << rows.size()
            << " points within tolerance " << format_double(f.tol) << '\n';
        return failed == 0 ? exit_ok : exit_validation_failed;
    } catch (const UsageError &e) {
        err << "attocell: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError &e) {
        err << "attocell: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConvergenceError &e) {
        err << "attocell: numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception &e) {
        err << "attocell: " << e.what() << '\n';
        return exit_numerical;
    }
}

} // namespace attocell::cli
