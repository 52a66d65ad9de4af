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

// JSON and CSV encodings shared by the command-line tool.

#ifndef CMIP_IO_HPP
#define CMIP_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cmip/qcore.hpp"
#include "cmip/qkd.hpp"
#include "cmip/tomography.hpp"

namespace cmip::io {

using json = nlohmann::ordered_json;

/// [{"label": ..., "symbols": [...]}, ...] in factor order.
json basis_to_json(const ModeBasis& basis);
ModeBasis basis_from_json(const json& j);

/// {"basis": [...], "amplitudes": [[re, im], ...]}
json state_to_json(const StateVector& state);
/// Applies the normalization repair window.
StateVector state_from_json(const json& j);

/// Nested rows of [re, im] pairs.
json matrix_to_json(const CMatrix& m);
json density_to_json(const DensityMatrix& rho);

json tomo_report_to_json(const TomoReport& report);

/// {n_pulses, sifted_key_length, conclusive_rate, qber, monitor_click_rate, seed}
json session_stats_to_json(const SessionStats& stats);

/// `setting,count,shots,seed` rows; exact mode prints the probability as
/// count and `exact` as shots.
std::string counts_to_csv(const CountsTable& counts);

/// `pulse,alice_bit,alice_output,bob_guess,result,bit`
std::string pulse_log_to_csv(const std::vector<PulseRecord>& log);

/// Nine significant digits, `.` decimal point.
std::string format_real(double x);

}  // namespace cmip::io

#endif  // CMIP_IO_HPP
