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

#ifndef CMIP_RANDOM_STATES_HPP
#define CMIP_RANDOM_STATES_HPP

#include "cmip/qcore.hpp"
#include "cmip/rng.hpp"

namespace cmip {

/// Haar-random pure state (normalized complex Gaussian vector).
StateVector random_state(const ModeBasis& basis, CounterRng& rng);

/// Haar-random unitary from the QR decomposition of a Ginibre matrix.
Operator random_unitary(const ModeBasis& basis, CounterRng& rng);

/// Random density matrix G G^dagger / tr, G a d x rank Ginibre matrix.
DensityMatrix random_density(const ModeBasis& basis, std::size_t rank, CounterRng& rng);

}  // namespace cmip

#endif  // CMIP_RANDOM_STATES_HPP
