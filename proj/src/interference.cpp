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

#include "attocell/interference.hpp"
#include "attocell/specfun.hpp"

#include <string>

namespace attocell
{

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::oracle: return "oracle";
    case Method::closed_form: return "closed_form";
    case Method::fov_closed_form: return "fov_closed_form";
    case Method::fov_oracle: return "fov_oracle";
    }
    return "unknown";
}

Method method_from_string(std::string_view name)
{
    for (Method m : {Method::oracle, Method::closed_form, Method::fov_closed_form, Method::fov_oracle})
        if (to_string(m) == name)
            return m;
    throw DomainError("unknown method '" + std::string(name) + "'");
}

} // namespace attocell
