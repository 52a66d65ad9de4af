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

#include "cmip/qkd.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "cmip/errors.hpp"
#include "cmip/interferometer.hpp"

namespace cmip {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kDegeneratePort = 1e-15;
constexpr double kAngleSlack = 1e-12;

StateVector pol_state(complex h, complex v) {
    CVector amps(2);
    amps << h, v;
    return StateVector::normalized(polarization_basis(), std::move(amps));
}

double prob_along(const StateVector& s, complex h, complex v) {
    return std::norm(std::conj(h) * s[0] + std::conj(v) * s[1]);
}

struct PulseOutcome {
    PulseRecord record;
    bool matched = false;
    bool sifted = false;
    bool error = false;
};

PulseOutcome run_pulse(const QkdConfig& cfg, const PortAngles& thetas, std::uint64_t i) {
    CounterRng rng(derive_seed(cfg.seed, i));
    PulseOutcome out;
    out.record.pulse = i;
    out.record.alice_bit = rng.bernoulli(0.5) ? 1 : 0;
    AlicePulse sent = alice_prepare(out.record.alice_bit, cfg, rng);
    out.record.alice_output = sent.port;
    StateVector channel = cfg.eve == EvePolicy::None
                              ? sent.state
                              : eve_intercept_resend(sent.state, cfg.eve, rng);
    out.record.bob_guess = rng.bernoulli(0.5) ? 2 : 1;
    out.record.result = bob_measure(channel, out.record.bob_guess, thetas, rng);

    out.matched = out.record.bob_guess == out.record.alice_output;
    out.sifted = out.matched && out.record.result.kind == BobResult::Kind::Conclusive;
    out.error = out.sifted && out.record.result.bit != out.record.alice_bit;
    return out;
}

}  // namespace

void QkdConfig::validate() const {
    auto plate_ok = [](double g) { return std::isfinite(g) && g >= 0.0 && g <= kQuarterPi; };
    if (!plate_ok(gamma1) || !plate_ok(gamma2)) {
        throw InvalidArgument("qkd plates must lie in [0, pi/4]");
    }
    if (std::abs(std::abs(gamma0) - std::numbers::pi / 8.0) > 1e-12) {
        throw InvalidArgument("qkd encoding plate must sit at +-pi/8");
    }
    if (n_pulses == 0) {
        throw InvalidArgument("qkd session needs at least one pulse");
    }
    const auto t = theta_angles(gamma1, gamma2);
    for (int j : {1, 2}) {
        const auto theta = t.port(j);
        if (!theta || *theta <= 0.0 || *theta > kHalfPi + kAngleSlack) {
            throw InvalidArgument("port " + std::to_string(j) +
                                  " angle must lie in (0, pi/2] for Bob to discriminate it");
        }
    }
}

PortAngles theta_angles(double gamma1, double gamma2) {
    const double c1 = std::cos(2.0 * gamma1);
    const double c2 = std::cos(2.0 * gamma2);
    const double s1 = std::sin(2.0 * gamma1);
    const double s2 = std::sin(2.0 * gamma2);
    PortAngles out;
    const double n1 = std::sqrt(c1 * c1 + c2 * c2);
    const double n2 = std::sqrt(s1 * s1 + s2 * s2);
    if (n1 > kDegeneratePort) {
        out.theta1 = 2.0 * std::acos(std::clamp(c1 / n1, -1.0, 1.0));
    }
    if (n2 > kDegeneratePort) {
        out.theta2 = 2.0 * std::acos(std::clamp(s2 / n2, -1.0, 1.0));
    }
    return out;
}

AlicePulse alice_prepare(int bit, const QkdConfig& cfg, CounterRng& rng) {
    if (bit != 0 && bit != 1) {
        throw InvalidArgument("alice bit must be 0 or 1");
    }
    const double g0 = bit == 0 ? std::abs(cfg.gamma0) : -std::abs(cfg.gamma0);
    const StateVector pol = pol_state(std::cos(2.0 * g0), std::sin(2.0 * g0));
    const StateVector path1 = StateVector::basis_state(
        ModeBasis({Factor::path(labels::kSignalPath)}), std::vector<std::string>{"1"});
    const StateVector evolved =
        apply(device_unitary(cfg.gamma1, cfg.gamma2), tensor(pol, path1));

    const auto port1 = postselect(evolved, labels::kSignalPath, "1");
    const auto port2 = postselect(evolved, labels::kSignalPath, "2");
    const bool first = rng.bernoulli(port1.probability);
    const auto& chosen = first ? port1 : port2;
    if (!chosen.state) {
        throw InvalidArgument("sampled a port with zero amplitude");
    }
    return {*chosen.state, first ? 1 : 2};
}

StateVector eve_intercept_resend(const StateVector& state, EvePolicy policy, CounterRng& rng) {
    if (policy == EvePolicy::None) {
        return state;
    }
    if (!(state.basis() == polarization_basis())) {
        throw BasisError("eve intercepts single-photon polarization states");
    }
    bool diagonal = policy == EvePolicy::InterceptDA;
    if (policy == EvePolicy::InterceptRandom) {
        diagonal = rng.bernoulli(0.5);
    }
    const double r = 1.0 / std::numbers::sqrt2;
    const complex h0 = diagonal ? r : 1.0;
    const complex v0 = diagonal ? r : 0.0;
    const complex h1 = diagonal ? r : 0.0;
    const complex v1 = diagonal ? -r : 1.0;
    if (rng.bernoulli(prob_along(state, h0, v0))) {
        return pol_state(h0, v0);
    }
    return pol_state(h1, v1);
}

BobResult bob_measure(const StateVector& state, int guess, const PortAngles& thetas,
                      CounterRng& rng) {
    if (guess != 1 && guess != 2) {
        throw InvalidArgument("bob guess must be 1 or 2");
    }
    const auto theta = thetas.port(guess);
    if (!theta || *theta > kHalfPi + kAngleSlack) {
        throw InvalidArgument("no discrimination angle for the guessed port");
    }
    const CmipPlan plan = CmipPlan::solve(std::min(*theta, kHalfPi), kHalfPi);
    const StateVector path1 = StateVector::basis_state(
        ModeBasis({Factor::path(labels::kSignalPath)}), std::vector<std::string>{"1"});
    const StateVector out = apply(build_unitary(plan), tensor(state, path1));

    const auto pass = postselect(out, labels::kSignalPath, "1");
    BobResult result;
    if (!pass.state || !rng.bernoulli(pass.probability)) {
        result.kind = BobResult::Kind::MonitorClick;
        return result;
    }
    const double r = 1.0 / std::numbers::sqrt2;
    result.kind = BobResult::Kind::Conclusive;
    result.bit = rng.bernoulli(prob_along(*pass.state, r, r)) ? 0 : 1;
    return result;
}

SessionStats run_session(const QkdConfig& cfg, std::vector<PulseRecord>* log, unsigned workers) {
    cfg.validate();
    const auto thetas = theta_angles(cfg.gamma1, cfg.gamma2);

    std::vector<PulseOutcome> outcomes(cfg.n_pulses);
    workers = std::max(1u, workers);
    if (workers == 1) {
        for (std::uint64_t i = 0; i < cfg.n_pulses; ++i) {
            outcomes[i] = run_pulse(cfg, thetas, i);
        }
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < cfg.n_pulses; i += workers) {
                    outcomes[i] = run_pulse(cfg, thetas, i);
                }
            });
        }
    }

    SessionStats stats;
    stats.n_pulses = cfg.n_pulses;
    stats.seed = cfg.seed;
    for (const auto& o : outcomes) {
        stats.matched_pulses += o.matched ? 1 : 0;
        stats.sifted_key_length += o.sifted ? 1 : 0;
        stats.sifted_errors += o.error ? 1 : 0;
        stats.monitor_clicks += o.record.result.kind == BobResult::Kind::MonitorClick ? 1 : 0;
        if (log) {
            log->push_back(o.record);
        }
    }
    stats.conclusive_rate = stats.matched_pulses == 0
                                ? 0.0
                                : static_cast<double>(stats.sifted_key_length) /
                                      static_cast<double>(stats.matched_pulses);
    if (stats.sifted_key_length > 0) {
        stats.qber = static_cast<double>(stats.sifted_errors) /
                     static_cast<double>(stats.sifted_key_length);
    }
    stats.monitor_click_rate =
        static_cast<double>(stats.monitor_clicks) / static_cast<double>(stats.n_pulses);
    return stats;
}

double printed_port1_probability(double theta1, double theta2) {
    return std::cos(theta2) /
           (2.0 * (std::cos((theta1 + theta2) / 2.0) + std::cos((theta1 - theta2) / 2.0)));
}

}  // namespace cmip
