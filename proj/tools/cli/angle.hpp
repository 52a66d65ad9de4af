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

#ifndef CMIP_CLI_ANGLE_HPP
#define CMIP_CLI_ANGLE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace cmip::cli {

/// Parses an angle given as decimal radians, `<k>pi`, `<p>/<q>pi`, `pi`,
/// or `asin(<x>)`, each with an optional leading sign. Throws
/// InvalidArgument on anything else or a non-finite result.
double parse_angle(std::string_view text);

/// Shortest decimal that parses back to the same double.
std::string format_angle(double radians);

struct SweepSpec {
    double start = 0.0;
    double stop = 0.0;
    int steps = 2;

    /// `<start>:<stop>:<steps>`; steps must be at least 2.
    static SweepSpec parse(std::string_view text);
    /// Inclusive grid; the endpoints are reproduced exactly.
    std::vector<double> grid() const;
};

}  // namespace cmip::cli

#endif  // CMIP_CLI_ANGLE_HPP
