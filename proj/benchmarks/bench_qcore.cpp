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
#include "cmip/entanglement.hpp"
#include "cmip/qcore.hpp"
#include "cmip/random_states.hpp"

namespace {

using namespace cmip;

void BM_concurrence_pure(benchmark::State& state) {
    CounterRng rng(1);
    const auto psi = random_state(polarization_pair_basis(), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(concurrence(psi));
    }
}
BENCHMARK(BM_concurrence_pure);

void BM_concurrence_mixed(benchmark::State& state) {
    CounterRng rng(2);
    const auto rho = random_density(polarization_pair_basis(), 4, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(concurrence(rho));
    }
}
BENCHMARK(BM_concurrence_mixed);

void BM_hermitian_eigen(benchmark::State& state) {
    CounterRng rng(3);
    const auto rho = random_density(two_photon_basis(), 8, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hermitian_eigen(rho.matrix()));
    }
}
BENCHMARK(BM_hermitian_eigen);

void BM_apply_cmip_signal(benchmark::State& state) {
    const auto s = prepare_two_photon({0.5351, 0.3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_cmip_signal(s, 0.6796, std::numbers::pi / 9));
    }
}
BENCHMARK(BM_apply_cmip_signal);

}  // namespace
