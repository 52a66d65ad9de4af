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

// Invariant suites of every module, runnable from the command line.

#ifndef CMIP_VERIFY_HPP
#define CMIP_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cmip::verify {

struct CheckResult {
    std::string module;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    /// Plate solver for the expanding branch; swap in a faulty one to
    /// confirm the inner-product contract notices.
    std::function<double(double, double)> gamma1_solver;
    std::uint64_t seed = 20260101;
};

Options default_options();

std::vector<CheckResult> run_qcore(const Options& options);
std::vector<CheckResult> run_interferometer(const Options& options);
std::vector<CheckResult> run_entanglement(const Options& options);
std::vector<CheckResult> run_tomography(const Options& options);
std::vector<CheckResult> run_qkd(const Options& options);

std::vector<CheckResult> run_all(const Options& options = default_options());

/// Inner-product contract alone, over alpha in {0.1, ..., 3.0} and the
/// same beta grid; returns the worst deviation from cos(beta).
double inner_product_contract_error(const std::function<double(double, double)>& gamma1_solver);

}  // namespace cmip::verify

#endif  // CMIP_VERIFY_HPP
