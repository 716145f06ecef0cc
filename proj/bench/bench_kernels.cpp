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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "eoftangle/audit.hpp"
#include "eoftangle/damping_dynamics.hpp"
#include "eoftangle/scans.hpp"

namespace {

using eoft::Execution;

Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_ScanW(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(eoft::scan_w(12, 12, mode(state)));
    }
    state.SetLabel(std::string(eoft::to_string(mode(state))));
}

void BM_DynamicsScan(benchmark::State& state) {
    const std::vector<double> times = eoft::uniform_time_grid(40.0, 400);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eoft::scan(eoft::DampingParams{}, times, mode(state)));
    }
    state.SetLabel(std::string(eoft::to_string(mode(state))));
}

void BM_RandomAudit(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(eoft::random_audit(50, eoft::kDefaultAuditSeed, {}, mode(state)));
    }
    state.SetLabel(std::string(eoft::to_string(mode(state))));
}

} // namespace

BENCHMARK(BM_ScanW)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DynamicsScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RandomAudit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
