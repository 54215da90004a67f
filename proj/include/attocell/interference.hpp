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

#ifndef ATTOCELL_INTERFERENCE_HPP
#define ATTOCELL_INTERFERENCE_HPP

#include <optional>
#include <string_view>

namespace attocell
{

enum class Method
{
    oracle,
    closed_form,
    fov_closed_form,
    fov_oracle,
};

std::string_view to_string(Method method);

// Throws DomainError on an unknown name.
Method method_from_string(std::string_view name);

// Normalised interference (the P_o-free sum of (D^2 + h^2)^-beta terms).
struct InterferenceResult
{
    double value = 0.0;
    Method method = Method::oracle;
    long long terms_used = 0;
    // Oracle: rigorous truncation bound. Closed form: asymptotic envelope.
    // Field-of-view closed form: absent.
    std::optional<double> error_envelope;
};

struct ErrorDiagnostics
{
    long long k_min_rule = 0;       // smallest admissible order (or radius) from the selection rule
    double envelope = 0.0;          // bare asymptotic envelope
    double tail_gamma_bound = 0.0;  // incomplete-gamma tail estimate
    double term_peak = 0.0;         // location of the largest spectral term
};

} // namespace attocell

#endif
