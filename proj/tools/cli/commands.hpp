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

// Command bodies, kept free of argv and file handling so they can be
// driven directly from tests.

#ifndef CMIP_CLI_COMMANDS_HPP
#define CMIP_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "angle.hpp"
#include "cmip/qcore.hpp"
#include "cmip/qkd.hpp"

namespace cmip::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIoError = 2, kVerifyFailed = 3 };

inline constexpr const char* kSeedEnv = "CMIP_SEED";

/// `exact` maps to nullopt, anything else must be a non-negative integer.
std::optional<std::uint64_t> parse_shots(std::string_view text);
std::uint64_t parse_seed(std::string_view text);
/// Seed from the environment, or 0 when unset.
std::uint64_t default_seed();

struct CmipArgs {
    double alpha = 0.0;
    SweepSpec beta;
    std::uint64_t shots = 100000;  // 0 = closed form only
    std::uint64_t seed = 0;
    unsigned workers = 1;
};
std::string cmip_csv(const CmipArgs& args);

struct EntangleArgs {
    /// Input angles; the first one also drives the entanglement table.
    std::vector<double> alphas;
    double delta = 0.0;
    double gamma2 = 0.0;
    SweepSpec gamma1;
    std::uint64_t seed = 0;
};
struct EntangleTables {
    std::string probability;
    std::string entanglement;
};
EntangleTables entangle_csv(const EntangleArgs& args);

/// Named constructors: psi_plus(a), psi_minus(a), phi_plus(b), phi_minus(b),
/// psi_pm(a, +|-), phi_pm(b, +|-) and two_photon(a, delta).
StateVector parse_state_spec(std::string_view spec);

struct TomoArgs {
    std::string state;
    std::optional<std::uint64_t> shots;  // nullopt = exact probabilities
    std::uint64_t seed = 0;
};
std::string tomo_json(const TomoArgs& args);

EvePolicy parse_eve(std::string_view text);

struct QkdResult {
    std::string stats_json;
    std::string pulse_csv;  // empty unless requested
};
QkdResult qkd_run(const QkdConfig& cfg, bool with_log, unsigned workers);

struct VerifyArgs {
    double perturb_gamma1 = 0.0;  // nonzero injects a faulty plate solver
    std::uint64_t seed = 20260101;
};
/// Writes one line per check; returns true when every check passed.
bool verify_report(const VerifyArgs& args, std::string& report);

}  // namespace cmip::cli

#endif  // CMIP_CLI_COMMANDS_HPP
