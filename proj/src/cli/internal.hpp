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

#ifndef ATTOCELL_SRC_CLI_INTERNAL_HPP
#define ATTOCELL_SRC_CLI_INTERNAL_HPP

#include "attocell/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace attocell::cli::detail
{

// Runs fn(i) for i in [0, count) on up to `threads` workers with a static
// strided partition. The first failure by index is rethrown after all
// workers join, so errors are reported identically for any thread count.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &fn)
{
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < count; i += stride) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(work, t, workers);
        for (auto &th : pool)
            th.join();
    }
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

// Applies a JSON configuration file on top of `config`.
void load_config_file(const std::string &path, ScenarioConfig &config, bool degrees);

bool is_angle_param(const std::string &param);
bool is_position_param(const std::string &param);

} // namespace attocell::cli::detail

#endif
