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

#include "cmip/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "cmip/errors.hpp"
#include "cmip/rng.hpp"

namespace cmip {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kPlanTol = 1e-9;

void require_angle(double x, const char* name) {
    if (!std::isfinite(x) || x < 0.0 || x > kPi) {
        throw InvalidArgument(std::string(name) + " must lie in [0, pi], got " + std::to_string(x));
    }
}

std::size_t index(const ModeBasis& b, const char* pol, const char* path) {
    const std::string syms[] = {pol, path};
    return b.index_of_symbols(syms);
}

}  // namespace

StateVector polarization_pair_state(double angle, Sign sign) {
    CVector amps(2);
    amps << std::cos(angle / 2.0), sign_value(sign) * std::sin(angle / 2.0);
    return StateVector::normalized(polarization_basis(), std::move(amps));
}

StateVector input_state(double alpha, Sign sign) {
    const auto b = signal_basis();
    CVector amps = CVector::Zero(4);
    amps[static_cast<Eigen::Index>(index(b, "H", "1"))] = std::cos(alpha / 2.0);
    amps[static_cast<Eigen::Index>(index(b, "V", "1"))] = sign_value(sign) * std::sin(alpha / 2.0);
    return StateVector::normalized(b, std::move(amps));
}

double solve_gamma1(double alpha, double beta) {
    require_angle(alpha, "alpha");
    require_angle(beta, "beta");
    if (beta < alpha) {
        throw WrongBranchError("solve_gamma1 needs alpha <= beta (expanding branch)");
    }
    if (alpha == beta) {
        return 0.0;
    }
    if (alpha == 0.0 || beta == kPi) {
        return kQuarterPi;
    }
    const double ratio = std::tan(alpha / 2.0) / std::tan(beta / 2.0);
    return 0.5 * std::acos(std::clamp(ratio, 0.0, 1.0));
}

double ContractSetting::gamma2() const {
    return 0.5 * std::acos(std::clamp(c2, 0.0, 1.0));
}

double ContractSetting::hardware_angle() const {
    return -0.5 * std::acos(std::clamp(-c2, -1.0, 0.0));
}

ContractSetting solve_gamma2(double alpha, double beta) {
    require_angle(alpha, "alpha");
    require_angle(beta, "beta");
    if (alpha < beta) {
        throw WrongBranchError("solve_gamma2 needs beta <= alpha (contracting branch)");
    }
    if (alpha == beta) {
        return {1.0};
    }
    if (beta == 0.0 || alpha == kPi) {
        return {0.0};
    }
    return {std::clamp(std::tan(beta / 2.0) / std::tan(alpha / 2.0), 0.0, 1.0)};
}

CmipPlan CmipPlan::solve(double alpha, double beta) {
    CmipPlan plan;
    plan.alpha = alpha;
    plan.beta = beta;
    if (alpha <= beta) {
        plan.branch = Branch::Expand;
        plan.gamma1 = solve_gamma1(alpha, beta);
    } else {
        plan.branch = Branch::Contract;
        plan.gamma2 = solve_gamma2(alpha, beta).gamma2();
    }
    return plan;
}

void CmipPlan::validate() const {
    require_angle(alpha, "alpha");
    require_angle(beta, "beta");
    auto plate_ok = [](double g) { return g >= 0.0 && g <= kQuarterPi + 1e-15; };
    if (branch == Branch::Expand) {
        if (alpha > beta) {
            throw InvalidArgument("expand plan requires alpha <= beta");
        }
        if (!plate_ok(gamma1) || gamma2 != 0.0) {
            throw InvalidArgument("expand plan requires gamma1 in [0, pi/4] and gamma2 = 0");
        }
    } else {
        if (beta > alpha) {
            throw InvalidArgument("contract plan requires beta <= alpha");
        }
        if (!plate_ok(gamma2) || gamma1 != 0.0) {
            throw InvalidArgument("contract plan requires gamma2 in [0, pi/4] and gamma1 = 0");
        }
    }
}

Operator device_unitary(double gamma1, double gamma2, double phi, double phi_prime) {
    const auto b = signal_basis();
    const auto h1 = static_cast<Eigen::Index>(index(b, "H", "1"));
    const auto v1 = static_cast<Eigen::Index>(index(b, "V", "1"));
    const auto h2 = static_cast<Eigen::Index>(index(b, "H", "2"));
    const auto v2 = static_cast<Eigen::Index>(index(b, "V", "2"));

    const double c1 = std::cos(2.0 * gamma1);
    const double s1 = std::sin(2.0 * gamma1);
    const double c2 = std::cos(2.0 * gamma2);
    const double s2 = std::sin(2.0 * gamma2);
    const complex eh = std::polar(1.0, phi_prime);
    const complex ev = std::polar(1.0, phi);

    CMatrix u = CMatrix::Zero(4, 4);
    u(h1, h1) = eh * c1;
    u(v2, h1) = eh * s1;
    u(h1, v2) = -eh * s1;
    u(v2, v2) = eh * c1;

    u(v1, v1) = ev * c2;
    u(h2, v1) = ev * s2;
    u(v1, h2) = -ev * s2;
    u(h2, h2) = ev * c2;
    return Operator::unitary(b, std::move(u));
}

Operator build_unitary(const CmipPlan& plan) {
    plan.validate();
    return device_unitary(plan.gamma1, plan.gamma2, plan.phi, plan.phi_prime);
}

BranchOutcome run_cmip(Sign input_sign, const CmipPlan& plan) {
    plan.validate();
    if (plan.branch == Branch::Expand) {
        if (std::abs(plan.gamma1 - solve_gamma1(plan.alpha, plan.beta)) > kPlanTol) {
            throw InvalidArgument("plan gamma1 is inconsistent with (alpha, beta)");
        }
    } else if (std::abs(plan.gamma2 - solve_gamma2(plan.alpha, plan.beta).gamma2()) > kPlanTol) {
        throw InvalidArgument("plan gamma2 is inconsistent with (alpha, beta)");
    }

    const StateVector out = apply(build_unitary(plan), input_state(plan.alpha, input_sign));
    const auto success = postselect(out, labels::kSignalPath, "1");
    const auto failure = postselect(out, labels::kSignalPath, "2");

    BranchOutcome outcome;
    outcome.success_state = success.state;
    outcome.p_success = success.probability;
    outcome.failure_state = failure.state;
    outcome.p_failure = failure.probability;
    return outcome;
}

double closed_form_probability(double alpha, double beta) {
    require_angle(alpha, "alpha");
    require_angle(beta, "beta");
    if (alpha == beta) {
        return 1.0;
    }
    if (alpha < beta) {
        const double sa = std::sin(alpha / 2.0);
        const double sb = std::sin(beta / 2.0);
        return std::clamp(sa * sa / (sb * sb), 0.0, 1.0);
    }
    if (alpha == kPi) {
        return 0.0;
    }
    const double ca = std::cos(alpha / 2.0);
    const double cb = std::cos(beta / 2.0);
    return std::clamp(ca * ca / (cb * cb), 0.0, 1.0);
}

RunCounts sample_runs(Sign input_sign, const CmipPlan& plan, std::uint64_t shots,
                      std::uint64_t seed, unsigned workers) {
    if (shots == 0) {
        throw InvalidArgument("sample_runs needs at least one shot");
    }
    const double p = run_cmip(input_sign, plan).p_success;

    const std::uint64_t chunks = (shots + kShotsPerChunk - 1) / kShotsPerChunk;
    std::vector<std::uint64_t> per_chunk(chunks, 0);
    auto run_chunk = [&](std::uint64_t k) {
        const std::uint64_t begin = k * kShotsPerChunk;
        const std::uint64_t n = std::min(kShotsPerChunk, shots - begin);
        CounterRng rng(derive_seed(seed, k));
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            hits += rng.bernoulli(p) ? 1 : 0;
        }
        per_chunk[k] = hits;
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
    if (workers == 1) {
        for (std::uint64_t k = 0; k < chunks; ++k) {
            run_chunk(k);
        }
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t k = w; k < chunks; k += workers) {
                    run_chunk(k);
                }
            });
        }
    }

    RunCounts counts;
    counts.shots = shots;
    counts.seed = seed;
    for (auto hits : per_chunk) {
        counts.success += hits;
    }
    counts.failure = shots - counts.success;
    return counts;
}

}  // namespace cmip
