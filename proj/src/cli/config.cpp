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

#include "cli/internal.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace attocell::cli
{

namespace detail
{

bool is_angle_param(const std::string &param)
{
    return param == "hpsa" || param == "fov";
}

bool is_position_param(const std::string &param)
{
    return param == "z" || param == "dx" || param == "dy";
}

namespace
{

using nlohmann::json;

double get_number(const json &j, const std::string &key)
{
    if (!j.is_number())
        throw UsageError("config: '" + key + "' must be a number");
    return j.get<double>();
}

int get_int(const json &j, const std::string &key)
{
    if (!j.is_number_integer())
        throw UsageError("config: '" + key + "' must be an integer");
    return j.get<int>();
}

std::string get_string(const json &j, const std::string &key)
{
    if (!j.is_string())
        throw UsageError("config: '" + key + "' must be a string");
    return j.get<std::string>();
}

SweepSpec parse_sweep_object(const json &j)
{
    SweepSpec s;
    if (j.is_string()) {
        // PARAM:LO:HI:STEP
        std::stringstream ss(j.get<std::string>());
        std::string part;
        std::vector<std::string> parts;
        while (std::getline(ss, part, ':'))
            parts.push_back(part);
        if (parts.size() != 4)
            throw UsageError("config: sweep string must be PARAM:LO:HI:STEP");
        try {
            return {parts[0], std::stod(parts[1]), std::stod(parts[2]), std::stod(parts[3])};
        } catch (const std::exception &) {
            throw UsageError("config: sweep bounds must be numbers");
        }
    }
    if (!j.is_object())
        throw UsageError("config: 'sweep' must be an object or PARAM:LO:HI:STEP string");
    for (const auto &[key, value] : j.items()) {
        if (key == "param")
            s.param = get_string(value, "sweep.param");
        else if (key == "lo")
            s.lo = get_number(value, "sweep.lo");
        else if (key == "hi")
            s.hi = get_number(value, "sweep.hi");
        else if (key == "step")
            s.step = get_number(value, "sweep.step");
        else
            throw UsageError("config: unknown sweep key '" + key + "'");
    }
    return s;
}

} // namespace

void load_config_file(const std::string &path, ScenarioConfig &config, bool degrees)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("config: cannot open '" + path + "'");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error &e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    if (!root.is_object())
        throw UsageError("config: top level must be an object");

    if (root.contains("degrees")) {
        if (!root["degrees"].is_boolean())
            throw UsageError("config: 'degrees' must be true or false");
        degrees = degrees || root["degrees"].get<bool>();
    }
    const double angle = degrees ? std::numbers::pi / 180.0 : 1.0;

    // model first: it decides how positions are read
    if (root.contains("model")) {
        const std::string m = get_string(root["model"], "model");
        if (m == "1d")
            config.model = Model::one_d;
        else if (m == "2d")
            config.model = Model::two_d;
        else
            throw UsageError("config: model must be 1d or 2d");
    }

    for (const auto &[key, value] : root.items()) {
        if (key == "model" || key == "degrees")
            continue;
        if (key == "h")
            config.net.h = get_number(value, key);
        else if (key == "a")
            config.net.a = get_number(value, key);
        else if (key == "hpsa")
            config.net.theta_h = get_number(value, key) * angle;
        else if (key == "fov")
            config.net.theta_f = get_number(value, key) * angle;
        else if (key == "A_pd")
            config.net.A_pd = get_number(value, key);
        else if (key == "R_pd")
            config.net.R_pd = get_number(value, key);
        else if (key == "P_o")
            config.net.P_o = get_number(value, key);
        else if (key == "N0")
            config.noise.N0 = get_number(value, key);
        else if (key == "W")
            config.noise.W = get_number(value, key);
        else if (key == "T")
            config.noise.T = get_number(value, key);
        else if (key == "method") {
            try {
                config.method = method_from_string(get_string(value, key));
            } catch (const DomainError &e) {
                throw UsageError(std::string("config: ") + e.what());
            }
        } else if (key == "n")
            config.n = get_int(value, key);
        else if (key == "k")
            config.k = get_int(value, key);
        else if (key == "jl") {
            if (!value.is_array() || value.size() != 2)
                throw UsageError("config: 'jl' must be [j, l]");
            config.jl = GridIndexSet{get_int(value[0], "jl"), get_int(value[1], "jl")};
        } else if (key == "target")
            config.target = get_number(value, key);
        else if (key == "threads")
            config.threads = get_int(value, key);
        else if (key == "out")
            config.out = get_string(value, key);
        else if (key == "format") {
            const std::string f = get_string(value, key);
            if (f == "csv")
                config.format = Format::csv;
            else if (f == "json")
                config.format = Format::json;
            else
                throw UsageError("config: format must be csv or json");
        } else if (key == "quadrature") {
            if (!value.is_object())
                throw UsageError("config: 'quadrature' must be an object");
            for (const auto &[qk, qv] : value.items()) {
                if (qk == "abs_tol")
                    config.quadrature.abs_tol = get_number(qv, qk);
                else if (qk == "rel_tol")
                    config.quadrature.rel_tol = get_number(qv, qk);
                else if (qk == "max_depth")
                    config.quadrature.max_depth = get_int(qv, qk);
                else
                    throw UsageError("config: unknown quadrature key '" + qk + "'");
            }
        } else if (key == "positions") {
            if (!value.is_array())
                throw UsageError("config: 'positions' must be an array");
            config.positions.clear();
            for (const auto &p : value) {
                if (config.model == Model::one_d) {
                    config.positions.push_back({get_number(p, "positions[]"), 0.0});
                } else {
                    if (!p.is_array() || p.size() != 2)
                        throw UsageError("config: 2d positions must be [dx, dy] pairs");
                    config.positions.push_back({get_number(p[0], "dx"), get_number(p[1], "dy")});
                }
            }
        } else if (key == "sweep") {
            SweepSpec s = parse_sweep_object(value);
            if (is_angle_param(s.param)) {
                s.lo *= angle;
                s.hi *= angle;
                s.step *= angle;
            }
            config.sweep = s;
        } else {
            throw UsageError("config: unknown key '" + key + "'");
        }
    }
}

} // namespace detail

void ScenarioConfig::validate() const
{
    net.validate();
    noise.validate();
    quadrature.validate();
    if (threads < 1)
        throw UsageError("threads must be >= 1");
    if (!(target > 0.0))
        throw UsageError("target must be > 0");

    const bool one_d = model == Model::one_d;
    for (const FieldPoint &p : positions) {
        if (!std::isfinite(p.dx) || !std::isfinite(p.dy))
            throw UsageError("positions must be finite");
        if (one_d && p.dy != 0.0)
            throw UsageError("1d positions take a single coordinate z");
    }

    const bool oracle_like = method == Method::oracle || method == Method::fov_oracle;
    if (n && method != Method::oracle)
        throw UsageError("--n applies to the oracle method only");
    if (n && *n < 1)
        throw UsageError("n must be >= 1");
    if (k && (oracle_like || !one_d))
        throw UsageError("--k applies to 1d closed forms only");
    if (k && *k < 0)
        throw UsageError("k must be >= 0");
    if (jl && (oracle_like || one_d))
        throw UsageError("--jl applies to 2d closed forms only");
    if (jl)
        jl->validate();

    if (sweep) {
        static const std::set<std::string> known{"z", "dx", "dy", "h", "a", "hpsa", "fov", "n", "k", "j"};
        const std::string &p = sweep->param;
        if (!known.count(p))
            throw UsageError("unknown sweep parameter '" + p + "'");
        if ((p == "dx" || p == "dy") && one_d)
            throw UsageError("sweep over dx/dy needs the 2d model");
        if (p == "n" && (method != Method::oracle || n))
            throw UsageError("sweep over n needs the oracle method and no --n");
        if (p == "k" && (!one_d || oracle_like || k))
            throw UsageError("sweep over k needs a 1d closed form and no --k");
        if (p == "j" && (one_d || oracle_like || jl))
            throw UsageError("sweep over j needs a 2d closed form and no --jl");
        if (detail::is_position_param(p) && !positions.empty())
            throw UsageError("a position sweep excludes an explicit positions list");
        if (positions.size() > 1)
            throw UsageError("a sweep runs at a single base position");
        sweep->values();
    }

    if (method == Method::fov_oracle && fov_unrestricted(net.theta_f)
        && !(sweep && sweep->param == "fov"))
        throw UsageError("fov_oracle needs a field of view below pi/2");
}

} // namespace attocell::cli
