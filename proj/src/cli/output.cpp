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

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

namespace attocell::cli
{

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

std::vector<double> SweepSpec::values() const
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step))
        throw UsageError("sweep: bounds and step must be finite");
    if (!(step > 0.0) || hi < lo)
        throw UsageError("sweep: empty range (need step > 0 and hi >= lo)");
    const double span = (hi - lo) / step;
    if (span > 1e7)
        throw UsageError("sweep: too many grid points");
    const long long count = static_cast<long long>(std::floor(span + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i)
        out.push_back(lo + static_cast<double>(i) * step);
    return out;
}

void write_csv(std::ostream &os, const std::vector<SweepRow> &rows)
{
    os << csv_header << '\n';
    for (const SweepRow &r : rows) {
        os << r.sweep_param << ',' << format_double(r.sweep_value) << ',' << format_double(r.value)
           << ',';
        if (r.error_envelope)
            os << format_double(*r.error_envelope);
        os << ',' << r.terms_used << ',' << r.method << '\n';
    }
}

namespace
{

// JSON has no infinities; they are written as strings.
nlohmann::ordered_json number(double v)
{
    if (std::isfinite(v))
        return v;
    return format_double(v);
}

} // namespace

void write_json(std::ostream &os, const std::string &command, const std::vector<SweepRow> &rows)
{
    nlohmann::ordered_json doc;
    doc["command"] = command;
    doc["columns"] = {"sweep_param", "sweep_value", "value", "error_envelope", "terms_used", "method"};
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const SweepRow &r : rows) {
        nlohmann::ordered_json j;
        j["sweep_param"] = r.sweep_param;
        j["sweep_value"] = number(r.sweep_value);
        j["value"] = number(r.value);
        j["error_envelope"] = r.error_envelope ? number(*r.error_envelope) : nlohmann::ordered_json();
        j["terms_used"] = r.terms_used;
        j["method"] = r.method;
        if (r.point) {
            j["dx"] = r.point->dx;
            j["dy"] = r.point->dy;
        }
        if (r.sinr) {
            j["sinr_db"] = number(r.sinr->sinr_db);
            j["signal"] = number(r.sinr->signal_term);
            j["interference"] = number(r.sinr->interference_term);
            j["omega"] = number(r.sinr->omega);
            j["infinite"] = r.sinr->infinite;
        }
        if (r.pass)
            j["status"] = *r.pass ? "PASS" : "FAIL";
        list.push_back(std::move(j));
    }
    doc["rows"] = std::move(list);
    os << doc.dump(2) << '\n';
}

} // namespace attocell::cli
