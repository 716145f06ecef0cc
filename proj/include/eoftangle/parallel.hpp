// Copyright 2026 The eoftangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <exception>
#include <string_view>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace eoft {

/// serial is the reference path; parallel distributes items over OpenMP
/// threads. Both produce identical, index-ordered output.
enum class Execution { serial, parallel };

inline std::string_view to_string(Execution exec) { return exec == Execution::serial ? "serial" : "parallel"; }

/// out[i] = fn(i) for i in [0, n). The first exception thrown by any item is
/// rethrown on the calling thread after the loop.
template <class Fn>
auto parallel_map(std::size_t n, Fn&& fn, Execution exec = Execution::parallel)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<Result> out(n);
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
        return out;
    }

    std::exception_ptr failure;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(eoft_parallel_map_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

} // namespace eoft
