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

#include "cmip/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cmip/entanglement.hpp"
#include "cmip/errors.hpp"
#include "cmip/interferometer.hpp"
#include "cmip/qkd.hpp"
#include "cmip/random_states.hpp"
#include "cmip/rng.hpp"
#include "cmip/tomography.hpp"

namespace cmip::verify {

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

template <typename F>
CheckResult timed(std::string module, std::string name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r{std::move(module), std::move(name), false, {}, 0.0};
    try {
        Outcome o = body();
        r.passed = o.passed;
        r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Outcome within(double worst, double tol) {
    std::ostringstream os;
    os << "max deviation " << worst << " (tol " << tol << ")";
    return {worst <= tol, os.str()};
}

std::vector<double> alpha_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 30; ++i) {
        g.push_back(0.1 * i);
    }
    return g;
}

/// Path-1 pair of the device for (alpha, beta) with phases at zero.
std::pair<StateVector, StateVector> success_pair(
    double alpha, double beta, const std::function<double(double, double)>& gamma1_solver) {
    double g1 = 0.0;
    double g2 = 0.0;
    if (alpha <= beta) {
        g1 = gamma1_solver(alpha, beta);
    } else {
        g2 = solve_gamma2(alpha, beta).gamma2();
    }
    const Operator u = device_unitary(g1, g2);
    auto plus = postselect(apply(u, input_state(alpha, Sign::Plus)), labels::kSignalPath, "1");
    auto minus = postselect(apply(u, input_state(alpha, Sign::Minus)), labels::kSignalPath, "1");
    if (!plus.state || !minus.state) {
        throw InvalidArgument("empty success branch");
    }
    return {*plus.state, *minus.state};
}

double pure_concurrence(const StateVector& s) {
    return 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

}  // namespace

Options default_options() {
    Options o;
    o.gamma1_solver = [](double a, double b) { return solve_gamma1(a, b); };
    return o;
}

double inner_product_contract_error(const std::function<double(double, double)>& gamma1_solver) {
    double worst = 0.0;
    for (double alpha : alpha_grid()) {
        for (double beta : alpha_grid()) {
            const auto [plus, minus] = success_pair(alpha, beta, gamma1_solver);
            const complex ip = plus.inner(minus);
            worst = std::max({worst, std::abs(ip.real() - std::cos(beta)), std::abs(ip.imag())});
        }
    }
    return worst;
}

std::vector<CheckResult> run_qcore(const Options& options) {
    std::vector<CheckResult> out;
    const std::string m = "qcore";

    out.push_back(timed(m, "unitarity preservation", [&] {
        CounterRng rng(derive_seed(options.seed, 1));
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const Operator u = i % 2 == 0
                                   ? random_unitary(signal_basis(), rng)
                                   : device_unitary(rng.uniform() * kPi / 4, rng.uniform() * kPi / 4,
                                                    rng.uniform() * 2 * kPi, rng.uniform() * 2 * kPi);
            const StateVector s = random_state(signal_basis(), rng);
            worst = std::max(worst, std::abs(apply(u, s).norm() - 1.0));
        }
        return within(worst, 1e-12);
    }));

    out.push_back(timed(m, "normalization repair window", [&] {
        CVector near(2);
        near << 1.0 + 5e-10, 0.0;
        CVector far(2);
        far << 1.0 + 1e-6, 0.0;
        const double repaired = StateVector::normalized(polarization_basis(), near).norm();
        bool rejected = false;
        try {
            StateVector::normalized(polarization_basis(), far);
        } catch (const NormalizationError&) {
            rejected = true;
        }
        CounterRng rng(derive_seed(options.seed, 2));
        const auto a = random_state(polarization_basis(), rng);
        const auto b = random_state(ModeBasis({Factor::polarization(labels::kIdlerPol)}), rng);
        const double tensor_err = std::abs(tensor(a, b).norm() - 1.0);
        const bool ok = std::abs(repaired - 1.0) < 1e-15 && rejected && tensor_err < 1e-12;
        return Outcome{ok, "repaired norm " + std::to_string(repaired) +
                               (rejected ? ", out-of-window rejected" : ", out-of-window accepted")};
    }));

    out.push_back(timed(m, "post-selection completeness", [&] {
        CounterRng rng(derive_seed(options.seed, 3));
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const StateVector s = random_state(two_photon_basis(), rng);
            for (const auto& f : s.basis().factors()) {
                double total = 0.0;
                for (const auto& sym : f.symbols) {
                    total += postselect(s, f.label, sym).probability;
                }
                worst = std::max(worst, std::abs(total - 1.0));
            }
        }
        return within(worst, 1e-12);
    }));

    out.push_back(timed(m, "concurrence pure-state equivalence", [&] {
        CounterRng rng(derive_seed(options.seed, 4));
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const StateVector s = random_state(polarization_pair_basis(), rng);
            worst = std::max(worst, std::abs(concurrence(s) - pure_concurrence(s)));
        }
        return within(worst, 1e-9);
    }));

    out.push_back(timed(m, "concurrence of Werner mixtures", [&] {
        // p |Phi+><Phi+| + (1 - p) I/4 has concurrence max(0, (3p - 1)/2).
        const double r = 1.0 / std::numbers::sqrt2;
        CVector bell = CVector::Zero(4);
        bell[0] = r;
        bell[3] = r;
        const CMatrix proj = bell * bell.adjoint();
        double worst = 0.0;
        for (int i = 0; i <= 50; ++i) {
            const double p = i / 50.0;
            const CMatrix m4 = p * proj + (1.0 - p) * CMatrix::Identity(4, 4) / 4.0;
            const double c = concurrence(DensityMatrix(polarization_pair_basis(), m4));
            worst = std::max(worst, std::abs(c - std::max(0.0, (3.0 * p - 1.0) / 2.0)));
        }
        return within(worst, 1e-9);
    }));

    out.push_back(timed(m, "concurrence local-unitary invariance", [&] {
        CounterRng rng(derive_seed(options.seed, 5));
        const ModeBasis a({Factor::polarization(labels::kSignalPol)});
        const ModeBasis b({Factor::polarization(labels::kIdlerPol)});
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const auto rho = random_density(polarization_pair_basis(), 1 + i % 4, rng);
            const Operator local = kron(random_unitary(a, rng), random_unitary(b, rng));
            worst = std::max(worst, std::abs(concurrence(conjugate(local, rho)) - concurrence(rho)));
        }
        return within(worst, 1e-9);
    }));

    out.push_back(timed(m, "two-photon concurrence independent of delta", [&] {
        double worst = 0.0;
        for (double alpha : {0.3, asin(0.51), 1.2, kPi / 2, 2.5}) {
            const double ref = concurrence(*apply_cmip_signal(prepare_two_photon({alpha, 0.0}), 0, 0).phi1);
            for (int k = 1; k < 24; ++k) {
                const double delta = 2.0 * kPi * k / 24.0;
                const auto phi1 = *apply_cmip_signal(prepare_two_photon({alpha, delta}), 0, 0).phi1;
                worst = std::max(worst, std::abs(concurrence(phi1) - ref));
            }
        }
        return within(worst, 1e-12);
    }));
    return out;
}

std::vector<CheckResult> run_interferometer(const Options& options) {
    std::vector<CheckResult> out;
    const std::string m = "interferometer";

    out.push_back(timed(m, "device unitarity on random plans", [&] {
        CounterRng rng(derive_seed(options.seed, 10));
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            auto plan = CmipPlan::solve(rng.uniform() * kPi, rng.uniform() * kPi);
            plan.phi = rng.uniform() * 2 * kPi;
            plan.phi_prime = rng.uniform() * 2 * kPi;
            const Operator op = build_unitary(plan);
            const CMatrix& u = op.matrix();
            worst = std::max(worst, (u.adjoint() * u - CMatrix::Identity(4, 4)).cwiseAbs().maxCoeff());
        }
        return within(worst, 1e-12);
    }));

    out.push_back(timed(m, "inner-product contract", [&] {
        return within(inner_product_contract_error(options.gamma1_solver), 1e-9);
    }));

    out.push_back(timed(m, "amplitude probability equals closed form", [&] {
        double worst = 0.0;
        for (double alpha : alpha_grid()) {
            for (double beta : alpha_grid()) {
                const auto plan = CmipPlan::solve(alpha, beta);
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    const auto o = run_cmip(s, plan);
                    worst = std::max(worst, std::abs(o.p_success - closed_form_probability(alpha, beta)));
                }
            }
        }
        return within(worst, 1e-12);
    }));

    out.push_back(timed(m, "optimal discrimination point", [&] {
        double worst = 0.0;
        for (double alpha : alpha_grid()) {
            if (alpha <= kPi / 2) {
                worst = std::max(worst,
                                 std::abs(closed_form_probability(alpha, kPi / 2) - (1.0 - std::cos(alpha))));
            }
        }
        return within(worst, 1e-12);
    }));

    out.push_back(timed(m, "success probability monotonicity", [&] {
        bool ok = true;
        for (double alpha : alpha_grid()) {
            double prev = 2.0;
            for (int k = 0; k <= 200; ++k) {
                const double beta = k == 200 ? kPi : alpha + (kPi - alpha) * k / 200.0;
                const double p = closed_form_probability(alpha, beta);
                ok = ok && p <= prev + 1e-15;
                prev = p;
            }
            prev = 2.0;
            for (int k = 0; k <= 200; ++k) {
                const double beta = alpha - alpha * k / 200.0;
                const double p = closed_form_probability(alpha, beta);
                ok = ok && p <= prev + 1e-15;
                prev = p;
            }
        }
        return Outcome{ok, ok ? "non-increasing away from beta = alpha" : "monotonicity violated"};
    }));

    out.push_back(timed(m, "failure state is a single mode", [&] {
        double worst = 0.0;
        for (double alpha : alpha_grid()) {
            for (double beta : alpha_grid()) {
                if (alpha == beta) {
                    continue;
                }
                const auto plan = CmipPlan::solve(alpha, beta);
                const char* mode = plan.branch == Branch::Expand ? "V" : "H";
                const std::string sym[] = {mode};
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    const auto o = run_cmip(s, plan);
                    if (!o.failure_state) {
                        continue;
                    }
                    const auto idx = static_cast<Eigen::Index>(polarization_basis().index_of_symbols(sym));
                    worst = std::max(worst, 1.0 - std::abs(o.failure_state->amplitudes()[idx]));
                }
            }
        }
        return within(worst, 1e-9);
    }));
    return out;
}

std::vector<CheckResult> run_entanglement(const Options&) {
    std::vector<CheckResult> out;
    const std::string m = "entanglement";
    auto alpha_at = [](int i) { return kPi * (i + 1) / 21.0; };
    auto gamma_at = [](int j) { return (kPi / 4.0) * j / 19.0; };

    out.push_back(timed(m, "closed forms match evolved states", [&] {
        double worst = 0.0;
        int mismatched_empty = 0;
        for (int i = 0; i < 20; ++i) {
            const double alpha = alpha_at(i);
            const auto state = prepare_two_photon({alpha, 0.3});
            const double e_in = std::abs(std::sin(alpha));
            for (int j = 0; j < 20; ++j) {
                for (int k = 0; k < 20; ++k) {
                    const double g1 = gamma_at(j);
                    const double g2 = gamma_at(k);
                    const auto br = apply_cmip_signal(state, g1, g2);
                    const auto [n1, n2] = branch_probabilities(alpha, g1, g2);
                    const auto closed = output_entanglement(e_in, g1, g2, alpha);
                    worst = std::max({worst, std::abs(br.n1 - n1), std::abs(br.n2 - n2)});
                    if (br.e1.has_value() != closed.e1.has_value() ||
                        br.e2.has_value() != closed.e2.has_value()) {
                        ++mismatched_empty;
                        continue;
                    }
                    if (br.e1) {
                        worst = std::max(worst, std::abs(*br.e1 - *closed.e1));
                    }
                    if (br.e2) {
                        worst = std::max(worst, std::abs(*br.e2 - *closed.e2));
                    }
                }
            }
        }
        auto o = within(worst, 1e-9);
        o.passed = o.passed && mismatched_empty == 0;
        o.detail += ", empty-branch mismatches " + std::to_string(mismatched_empty);
        return o;
    }));

    out.push_back(timed(m, "concentration predicate equivalence", [&] {
        int mismatches = 0;
        for (int i = 0; i < 20; ++i) {
            const double alpha = alpha_at(i);
            const double e_in = std::abs(std::sin(alpha));
            for (int j = 0; j < 20; ++j) {
                for (int k = 0; k < 20; ++k) {
                    const double g1 = gamma_at(j);
                    const double g2 = gamma_at(k);
                    const auto e = output_entanglement(e_in, g1, g2, alpha).e1;
                    if (!e) {
                        continue;
                    }
                    if (concentration_predicate(alpha, g1, g2) != (*e >= e_in - 1e-12)) {
                        ++mismatches;
                    }
                }
            }
        }
        return Outcome{mismatches == 0, std::to_string(mismatches) + " mismatches"};
    }));

    out.push_back(timed(m, "path-1 probability at maximal entanglement", [&] {
        double worst = 0.0;
        int solved = 0;
        for (int i = 0; i < 20; ++i) {
            const double alpha = alpha_at(i);
            for (int k = 0; k < 20; ++k) {
                const double g2 = gamma_at(k);
                const auto g1 = solve_max_entanglement(alpha, g2, 1);
                if (!g1) {
                    continue;
                }
                ++solved;
                const double sa = std::sin(alpha / 2.0);
                const double c2 = std::cos(2.0 * g2);
                const double n1 = branch_probabilities(alpha, *g1, g2).first;
                const double e1 = *apply_cmip_signal(prepare_two_photon({alpha, 0.0}), *g1, g2).e1;
                worst = std::max({worst, std::abs(n1 - 2.0 * sa * sa * c2 * c2), std::abs(e1 - 1.0)});
            }
        }
        auto o = within(worst, 1e-9);
        o.detail += " over " + std::to_string(solved) + " solvable points";
        return o;
    }));

    out.push_back(timed(m, "delta neutrality", [&] {
        double worst = 0.0;
        for (int i = 0; i < 20; i += 3) {
            const double alpha = alpha_at(i);
            for (int j = 0; j < 20; j += 4) {
                for (int k = 1; k < 19; k += 4) {
                    const auto ref = apply_cmip_signal(prepare_two_photon({alpha, 0.0}), gamma_at(j), gamma_at(k));
                    for (int d = 1; d < 12; ++d) {
                        const auto br = apply_cmip_signal(prepare_two_photon({alpha, 2 * kPi * d / 12.0}),
                                                          gamma_at(j), gamma_at(k));
                        worst = std::max({worst, std::abs(br.n1 - ref.n1), std::abs(br.n2 - ref.n2)});
                        if (br.e1 && ref.e1) {
                            worst = std::max(worst, std::abs(*br.e1 - *ref.e1));
                        }
                        if (br.e2 && ref.e2) {
                            worst = std::max(worst, std::abs(*br.e2 - *ref.e2));
                        }
                    }
                }
            }
        }
        return within(worst, 1e-12);
    }));
    return out;
}

std::vector<CheckResult> run_tomography(const Options& options) {
    std::vector<CheckResult> out;
    const std::string m = "tomography";

    out.push_back(timed(m, "exact-probability round trip", [&] {
        CounterRng rng(derive_seed(options.seed, 30));
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const ModeBasis basis = i % 2 == 0 ? polarization_basis() : polarization_pair_basis();
            const DensityMatrix rho = i % 4 < 2 ? DensityMatrix::pure(random_state(basis, rng))
                                                : random_density(basis, basis.dimension(), rng);
            const auto report = reconstruct(simulate_counts(rho, std::nullopt, 0));
            worst = std::max(worst, (report.rho_hat.matrix() - rho.matrix()).cwiseAbs().maxCoeff());
        }
        return within(worst, 1e-8);
    }));

    out.push_back(timed(m, "catalog is informationally complete", [&] {
        Eigen::JacobiSVD<Eigen::MatrixXd> one(design_matrix(projector_catalog(1)));
        Eigen::JacobiSVD<Eigen::MatrixXd> two(design_matrix(projector_catalog(2)));
        auto rank = [](const Eigen::VectorXd& s) { return (s.array() > 1e-10 * s[0]).count(); };
        const auto r1 = rank(one.singularValues());
        const auto r2 = rank(two.singularValues());
        return Outcome{r1 == 4 && r2 == 16,
                       "ranks " + std::to_string(r1) + " and " + std::to_string(r2)};
    }));
    return out;
}

std::vector<CheckResult> run_qkd(const Options& options) {
    std::vector<CheckResult> out;
    const std::string m = "qkd";

    out.push_back(timed(m, "no eavesdropper means no errors", [&] {
        std::uint64_t errors = 0;
        std::uint64_t sifted = 0;
        for (double g2 : {kPi / 8, 0.5, 0.7}) {
            for (std::uint64_t s = 0; s < 3; ++s) {
                QkdConfig cfg;
                cfg.gamma1 = kPi / 8 * (g2 < kPi / 8 ? 0.5 : 1.0);
                cfg.gamma2 = g2;
                cfg.n_pulses = 4000;
                cfg.seed = derive_seed(options.seed, 40 + s);
                const auto stats = run_session(cfg);
                errors += stats.sifted_errors;
                sifted += stats.sifted_key_length;
            }
        }
        return Outcome{errors == 0 && sifted > 0,
                       std::to_string(errors) + " errors in " + std::to_string(sifted) + " sifted bits"};
    }));

    out.push_back(timed(m, "session determinism", [&] {
        QkdConfig cfg;
        cfg.n_pulses = 5000;
        cfg.seed = options.seed;
        cfg.eve = EvePolicy::InterceptRandom;
        const auto a = run_session(cfg);
        const auto b = run_session(cfg);
        const auto c = run_session(cfg, nullptr, 3);
        return Outcome{a == b && a == c, a == b && a == c ? "identical" : "sessions differ"};
    }));
    return out;
}

std::vector<CheckResult> run_all(const Options& options) {
    std::vector<CheckResult> all;
    for (auto* suite : {&run_qcore, &run_interferometer, &run_entanglement, &run_tomography, &run_qkd}) {
        auto part = suite(options);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace cmip::verify
