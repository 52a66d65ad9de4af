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

// "4+2" key distribution over the device.
//
// Alice sends (|H> +- |V>)/sqrt2 (bit 0 / bit 1) through her device with
// both plates set, and forwards whichever output port fired. Port j carries
// the pair cos(t_j/2)|H> +- sin(t_j/2)|V>. Bob guesses the port, sets his
// expanding plate for (t_guess -> pi/2), counts a path-2 click as a monitor
// event and measures path 1 in the +-45 basis. Only pulses with a correct
// guess and a conclusive result are kept.

#ifndef CMIP_QKD_HPP
#define CMIP_QKD_HPP

#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "cmip/qcore.hpp"
#include "cmip/rng.hpp"

namespace cmip {

enum class EvePolicy {
    None,
    InterceptHV,      // measure H/V, resend the eigenstate
    InterceptDA,      // measure +-45
    InterceptRandom,  // H/V or +-45 with probability 1/2 each
};

struct QkdConfig {
    double gamma1 = std::numbers::pi / 8.0;
    double gamma2 = std::numbers::pi / 8.0;
    double gamma0 = std::numbers::pi / 8.0;  // Alice's encoding plate magnitude
    std::uint64_t n_pulses = 10000;
    std::uint64_t seed = 0;
    EvePolicy eve = EvePolicy::None;

    /// Throws InvalidArgument unless both port angles exist and lie in (0, pi/2].
    void validate() const;
};

struct PortAngles {
    std::optional<double> theta1;  // empty when the port carries no amplitude
    std::optional<double> theta2;

    std::optional<double> port(int j) const { return j == 1 ? theta1 : theta2; }
};

PortAngles theta_angles(double gamma1, double gamma2);

struct AlicePulse {
    StateVector state;  // polarization only
    int port = 1;
};

/// Port sampled from the amplitudes of the evolved state.
AlicePulse alice_prepare(int bit, const QkdConfig& cfg, CounterRng& rng);

/// Projective measurement in the policy's basis, eigenstate resent.
StateVector eve_intercept_resend(const StateVector& state, EvePolicy policy, CounterRng& rng);

struct BobResult {
    enum class Kind { Conclusive, MonitorClick };
    Kind kind = Kind::MonitorClick;
    int bit = 0;  // valid when conclusive
};

/// Throws InvalidArgument when the guessed port has no angle or one above pi/2.
BobResult bob_measure(const StateVector& state, int guess, const PortAngles& thetas,
                      CounterRng& rng);

struct PulseRecord {
    std::uint64_t pulse = 0;
    int alice_bit = 0;
    int alice_output = 1;
    int bob_guess = 1;
    BobResult result;
};

struct SessionStats {
    std::uint64_t n_pulses = 0;
    std::uint64_t matched_pulses = 0;  // guess equals Alice's port
    std::uint64_t sifted_key_length = 0;
    std::uint64_t sifted_errors = 0;
    std::uint64_t monitor_clicks = 0;
    /// sifted / matched pulses
    double conclusive_rate = 0.0;
    /// Errors among sifted bits; empty when nothing was sifted.
    std::optional<double> qber;
    double monitor_click_rate = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const SessionStats&) const = default;
};

/// Pulse i draws from the stream derive_seed(cfg.seed, i). The per-pulse
/// log is appended in pulse order when `log` is non-null.
SessionStats run_session(const QkdConfig& cfg, std::vector<PulseRecord>* log = nullptr,
                         unsigned workers = 1);

/// The generation probability printed next to the port angles,
/// cos t2 / [2 (cos((t1+t2)/2) + cos((t1-t2)/2))]. Kept for reference only;
/// it vanishes at t1 = t2 = pi/2 where both ports are equally likely, so
/// sessions use the amplitude-derived probability instead.
double printed_port1_probability(double theta1, double theta2);

}  // namespace cmip

#endif  // CMIP_QKD_HPP
