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

#include "benchmark/benchmark.h"
#include "cmip/qkd.hpp"

namespace {

using namespace cmip;

void BM_run_session(benchmark::State& state) {
    QkdConfig cfg;
    cfg.n_pulses = 100000;
    cfg.eve = static_cast<EvePolicy>(state.range(0));
    const auto workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_session(cfg, nullptr, workers));
        ++cfg.seed;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.n_pulses));
}
BENCHMARK(BM_run_session)
    ->Args({static_cast<int>(EvePolicy::None), 1})
    ->Args({static_cast<int>(EvePolicy::InterceptRandom), 1})
    ->Args({static_cast<int>(EvePolicy::None), 4})
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
