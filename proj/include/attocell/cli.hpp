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

#ifndef ATTOCELL_CLI_HPP
#define ATTOCELL_CLI_HPP

#include "attocell/channel.hpp"
#include "attocell/field2d.hpp"
#include "attocell/interference.hpp"
#include "attocell/sinr.hpp"
#include "attocell/specfun.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace attocell::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_validation_failed = 1,
    exit_usage = 2,
    exit_numerical = 3,
};

// Malformed command line or inconsistent configuration.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class Model
{
    one_d,
    two_d,
};

enum class Format
{
    csv,
    json,
};

// Receiver offset from the serving LED. 1-D uses dx as z.
struct FieldPoint
{
    double dx = 0.0;
    double dy = 0.0;
};

struct SweepSpec
{
    std::string param;
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;

    // lo, lo + step, ... up to hi (inclusive within 1e-9 steps).
    std::vector<double> values() const;
};

struct ScenarioConfig
{
    Model model = Model::one_d;
    NetworkParams net;
    NoiseParams noise;
    std::vector<FieldPoint> positions;
    std::optional<SweepSpec> sweep;
    Method method = Method::closed_form;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<GridIndexSet> jl;
    double target = 1e-12;  // truncation target when k or (j, l) is chosen automatically
    QuadratureSpec quadrature;
    std::string out;        // empty: standard output
    Format format = Format::csv;
    int threads = 1;

    // Throws UsageError or DomainError.
    void validate() const;
};

struct SweepRow
{
    std::string sweep_param;
    double sweep_value = 0.0;
    double value = 0.0;
    std::optional<double> error_envelope;
    long long terms_used = 0;
    std::string method;
    // optional extras carried into JSON
    std::optional<FieldPoint> point;
    std::optional<SinrResult> sinr;
    std::optional<bool> pass;
};

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

inline constexpr const char *csv_header =
    "sweep_param,sweep_value,value,error_envelope,terms_used,method";

void write_csv(std::ostream &os, const std::vector<SweepRow> &rows);
void write_json(std::ostream &os, const std::string &command, const std::vector<SweepRow> &rows);

std::vector<SweepRow> cmd_interference(const ScenarioConfig &config);
std::vector<SweepRow> cmd_sinr(const ScenarioConfig &config);
// Rows carry |oracle - closed form| and pass flags.
std::vector<SweepRow> cmd_validate(const ScenarioConfig &config, int n_ref, double tolerance);

struct FigureInfo
{
    std::string id;
    std::string binding;  // parameter set and series, as reproduced
};

const std::vector<FigureInfo> &figure_catalog();

// Throws UsageError for an unknown id.
std::vector<SweepRow> cmd_figure(const std::string &id, int threads = 1);

// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace attocell::cli

#endif
