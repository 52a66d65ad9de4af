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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "cmip/entanglement.hpp"
#include "cmip/interferometer.hpp"
#include "cmip/qcore.hpp"
#include "cmip/qkd.hpp"
#include "cmip/random_states.hpp"
#include "cmip/rng.hpp"
#include "cmip/tomography.hpp"
#include "cmip/verify.hpp"
#include "qkd_oracle.hpp"

namespace {

using namespace cmip;

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Bisection for a sign change of f on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Outcome idp_point() {
    double worst = 0.0;
    for (int k = 1; k <= 15; ++k) {
        const double alpha = 0.1 * k;
        worst = std::max(worst, std::abs(closed_form_probability(alpha, kPi / 2) - (1.0 - std::cos(alpha))));
    }
    return {worst <= 1e-12, fmt("max |P - (1 - cos a)| = %.2e", worst)};
}

Outcome sweep_reproduction() {
    constexpr std::uint64_t kShots = 100000;
    constexpr std::uint64_t kSeed = 20260101;
    double worst_sigma = 0.0;
    bool ok = true;
    std::uint64_t index = 0;
    for (double alpha : {kPi / 2, kPi / 4}) {
        for (int i = 0; i < 64; ++i) {
            const double beta = i == 63 ? kPi : kPi * i / 63.0;
            const double p = closed_form_probability(alpha, beta);
            const auto runs = sample_runs(Sign::Plus, CmipPlan::solve(alpha, beta), kShots,
                                          derive_seed(kSeed, index++), 4);
            const double freq = static_cast<double>(runs.success) / kShots;
            const double bound = 4.0 * std::sqrt(p * (1.0 - p) / kShots);
            if (std::abs(freq - p) > bound) {
                ok = false;
            }
            if (bound > 0) {
                worst_sigma = std::max(worst_sigma, 4.0 * std::abs(freq - p) / bound);
            }
        }
        const auto at_alpha = sample_runs(Sign::Plus, CmipPlan::solve(alpha, alpha), kShots, kSeed, 4);
        if (std::abs(closed_form_probability(alpha, alpha) - 1.0) > 1e-12 || at_alpha.success != kShots) {
            ok = false;
        }
    }
    return {ok, fmt("128 points, worst deviation %.2f sigma, P(b = a) = 1", worst_sigma)};
}

Outcome inner_product_contract() {
    double worst = 0.0;
    for (int i = 1; i <= 30; ++i) {
        for (int j = 1; j <= 30; ++j) {
            const double alpha = 0.1 * i;
            const double beta = 0.1 * j;
            const auto plan = CmipPlan::solve(alpha, beta);
            const auto plus = run_cmip(Sign::Plus, plan).success_state;
            const auto minus = run_cmip(Sign::Minus, plan).success_state;
            if (!plus || !minus) {
                return {false, fmt("no success state at a=%.1f b=%.1f", alpha, beta)};
            }
            const complex ip = plus->inner(*minus);
            worst = std::max({worst, std::abs(ip.real() - std::cos(beta)), std::abs(ip.imag())});
        }
    }
    return {worst <= 1e-9, fmt("900 points, max |<+|-> - cos b| = %.2e", worst)};
}

double n1_formula(double alpha, double g1, double g2) {
    const double c = std::cos(alpha / 2);
    const double s = std::sin(alpha / 2);
    return c * c * std::pow(std::cos(2 * g1), 2) + s * s * std::pow(std::cos(2 * g2), 2);
}

double e1_formula(double e, double alpha, double g1, double g2) {
    return e * std::abs(std::cos(2 * g1) * std::cos(2 * g2)) / n1_formula(alpha, g1, g2);
}

Outcome success_curves() {
    const double g2 = kPi / 9;
    const double expected = std::pow(std::cos(2 * kPi / 9), 2);
    double closed = 0.0;
    double crossing = 0.0;
    for (double e : {0.51, 0.74, 0.90}) {
        const double alpha = std::asin(e);
        const auto state = prepare_two_photon({alpha, 0.0});
        for (int i = 0; i <= 90; ++i) {
            const double g1 = kPi / 4 * i / 90.0;
            const double n1 = branch_probabilities(alpha, g1, g2).first;
            closed = std::max({closed, std::abs(n1 - n1_formula(alpha, g1, g2)),
                               std::abs(apply_cmip_signal(state, g1, g2).n1 - n1)});
        }
        crossing = std::max(crossing, std::abs(branch_probabilities(alpha, g2, g2).first - expected));
    }
    return {closed <= 1e-12 && crossing <= 1e-9 && std::abs(expected - 0.586824) < 5e-7,
            fmt("curve error %.2e, intersection %.9f (error %.2e)", closed, expected, crossing)};
}

Outcome concentration_curve() {
    const double e = 0.51;
    const double alpha = std::asin(e);
    const double g2 = kPi / 9;
    const auto state = prepare_two_photon({alpha, 0.0});
    double formula = 0.0;
    double brute = 0.0;
    for (int i = 0; i <= 900; ++i) {
        const double g1 = kPi / 4 * i / 900.0;
        const auto e1 = output_entanglement(e, g1, g2, alpha).e1;
        const auto br = apply_cmip_signal(state, g1, g2);
        if (!e1 || !br.phi1) {
            continue;
        }
        formula = std::max(formula, std::abs(*e1 - e1_formula(e, alpha, g1, g2)));
        brute = std::max(brute, std::abs(*e1 - concurrence(*br.phi1)));
    }
    const auto gap = [&](double g1) { return *output_entanglement(e, g1, g2, alpha).e1 - e; };
    const double peak = *solve_max_entanglement(alpha, g2, 1);
    const double lower = std::abs(gap(g2));
    const double upper = bisect(gap, peak, kPi / 4);
    const double e_peak = *output_entanglement(e, peak, g2, alpha).e1;
    const double n1_peak = branch_probabilities(alpha, peak, g2).first;

    const bool curve_ok = formula <= 1e-9 && brute <= 1e-9;
    const bool crossings_ok = lower <= 1e-12 && std::abs(upper / kPi - 0.24083) <= 5e-6;
    const bool peak_ok = std::abs(e_peak - 1.0) <= 1e-9 && std::abs(peak / kPi - 0.21633) <= 5e-6;
    const bool n1_ok = std::abs(n1_peak - 0.081986) <= 1e-6;
    return {curve_ok && crossings_ok && peak_ok && n1_ok,
            fmt("curve %.1e/%.1e, crossings pi/9 and %.6fpi, peak e1=%.12f at %.6fpi, "
                "n1=%.7f (expected 0.081986)",
                formula, brute, upper / kPi, e_peak, peak / kPi, n1_peak)};
}

Outcome predicate_equivalence() {
    int mismatches = 0;
    int boundary = 0;
    for (int i = 0; i < 20; ++i) {
        const double alpha = kPi * (i + 0.5) / 20.0;
        const double e = std::sin(alpha);
        for (int j = 0; j < 20; ++j) {
            const double g1 = kPi / 4 * j / 19.0;
            for (int k = 0; k < 20; ++k) {
                const double g2 = kPi / 4 * k / 19.0;
                const auto e1 = output_entanglement(e, g1, g2, alpha).e1;
                if (!e1) {
                    continue;
                }
                if (std::abs(*e1 - e) <= 1e-12) {
                    ++boundary;
                    continue;
                }
                if (concentration_predicate(alpha, g1, g2) != (*e1 >= e)) {
                    ++mismatches;
                }
            }
        }
    }
    return {mismatches == 0, fmt("8000 points, %d mismatches, %d on the boundary", mismatches, boundary)};
}

Outcome tomography_round_trip() {
    CounterRng rng(derive_seed(20260101, 7));
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho =
            i % 2 == 0 ? DensityMatrix::pure(random_state(polarization_pair_basis(), rng))
                       : random_density(polarization_pair_basis(), 1 + (i / 2) % 4, rng);
        const auto r = reconstruct(simulate_counts(rho, std::nullopt, 0));
        worst = std::max(worst, (r.rho_hat.matrix() - rho.matrix()).norm());
    }
    double worst_median = 1.0;
    for (const auto& target :
         {polarization_pair_state(kPi / 4, Sign::Plus), polarization_pair_state(0.44 * kPi, Sign::Plus)}) {
        std::vector<double> f;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            f.push_back(*reconstruct(simulate_counts(DensityMatrix::pure(target), 10000, seed), target)
                             .fidelity_vs_target);
        }
        worst_median = std::min(worst_median, median(f));
    }
    return {worst <= 1e-8 && worst_median > 0.99,
            fmt("exact error %.2e over 200 states, median F >= %.5f at 1e4 shots", worst, worst_median)};
}

// Plate angles with theta1 = theta, gamma1 held at 0.25.
QkdConfig port1_config(double theta) {
    QkdConfig cfg;
    cfg.gamma1 = 0.25;
    cfg.gamma2 = bisect([&](double g2) { return *theta_angles(0.25, g2).theta1 - theta; }, 0.25,
                        kPi / 4 - 1e-9);
    return cfg;
}

Outcome qkd_session() {
    constexpr std::uint64_t kPulses = 100000;
    bool ok = true;
    std::string detail;

    QkdConfig base;
    base.n_pulses = kPulses;
    base.seed = 42;
    const auto clean = run_session(base, nullptr, 4);
    ok = ok && clean.qber && *clean.qber == 0.0;
    detail += fmt("no-Eve qber %g; ", clean.qber.value_or(-1.0));

    for (double theta : {kPi / 3, 0.4 * kPi, kPi / 2}) {
        QkdConfig cfg = port1_config(theta);
        cfg.n_pulses = kPulses;
        cfg.seed = 43;
        std::vector<PulseRecord> log;
        run_session(cfg, &log, 4);
        std::uint64_t matched = 0;
        std::uint64_t conclusive = 0;
        for (const auto& r : log) {
            if (r.alice_output == 1 && r.bob_guess == 1) {
                ++matched;
                conclusive += r.result.kind == BobResult::Kind::Conclusive;
            }
        }
        const double p = 1.0 - std::cos(theta);
        const double freq = static_cast<double>(conclusive) / static_cast<double>(matched);
        const bool within = std::abs(freq - p) <= 4.0 * std::sqrt(p * (1.0 - p) / matched) + 1e-15;
        ok = ok && within;
        detail += fmt("rate %.4f vs %.4f; ", freq, p);
    }

    for (EvePolicy eve : {EvePolicy::InterceptHV, EvePolicy::InterceptRandom}) {
        QkdConfig cfg = base;
        cfg.eve = eve;
        const auto stats = run_session(cfg, nullptr, 4);
        const double q = testing::enumerate_session(cfg.gamma1, cfg.gamma2, eve).qber;
        const double sigma = std::sqrt(q * (1.0 - q) / static_cast<double>(stats.sifted_key_length));
        const bool within = stats.qber && std::abs(*stats.qber - q) <= 4.0 * sigma;
        ok = ok && within;
        detail += fmt("%s qber %.4f vs %.4f; ", eve == EvePolicy::InterceptHV ? "H/V" : "random",
                      stats.qber.value_or(-1.0), q);
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

Outcome property_suite() {
    const auto results = verify::run_all();
    int failed = 0;
    std::string names;
    for (const auto& r : results) {
        if (!r.passed) {
            ++failed;
            names += " " + r.module + "/" + r.name;
        }
    }
    return {failed == 0, fmt("%zu checks, %d failed%s", results.size(), failed, names.c_str())};
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "optimal discrimination point", 1.0, idp_point},
        {2, "success probability sweep", 30.0, sweep_reproduction},
        {3, "inner-product contract", 5.0, inner_product_contract},
        {4, "filter success curves", 5.0, success_curves},
        {5, "concentration curve", 10.0, concentration_curve},
        {6, "concentration predicate", 10.0, predicate_equivalence},
        {7, "tomography round trip", 60.0, tomography_round_trip},
        {8, "key distribution session", 30.0, qkd_session},
        {9, "property suite", 180.0, property_suite},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool passed = out.passed && seconds < c.limit_seconds;
        failures += !passed;
        std::printf("%s [%d] %-28s %6.2fs (limit %3.0fs)  %s\n", passed ? "PASS" : "FAIL", c.id, c.title, seconds,
                    c.limit_seconds, out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
                std::size(criteria));
    return failures == 0 ? 0 : 1;
}
