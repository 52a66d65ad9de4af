// Copyright 2026 The cmip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numbers>

#include "benchmark/benchmark.h"
#include "cmip/interferometer.hpp"

namespace {

using namespace cmip;

constexpr double kPi = std::numbers::pi;

void BM_run_cmip(benchmark::State& state) {
    const auto plan = CmipPlan::solve(kPi / 4, kPi / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_cmip(Sign::Plus, plan));
    }
}
BENCHMARK(BM_run_cmip);

void BM_sample_runs(benchmark::State& state) {
    const auto plan = CmipPlan::solve(kPi / 4, kPi / 2);
    const auto workers = static_cast<unsigned>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_runs(Sign::Plus, plan, 1000000, seed++, workers));
    }
    state.SetItemsProcessed(state.iterations() * 1000000);
}
BENCHMARK(BM_sample_runs)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
