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
#include "cmip/tomography.hpp"

namespace {

using namespace cmip;

void BM_simulate_counts(benchmark::State& state) {
    const auto rho = DensityMatrix::pure(polarization_pair_state(0.44 * std::numbers::pi, Sign::Plus));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_counts(rho, 10000, seed++));
    }
}
BENCHMARK(BM_simulate_counts);

void BM_reconstruct(benchmark::State& state) {
    const auto psi = polarization_pair_state(0.44 * std::numbers::pi, Sign::Plus);
    const auto counts = simulate_counts(DensityMatrix::pure(psi), 10000, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct(counts, psi));
    }
}
BENCHMARK(BM_reconstruct);

}  // namespace
