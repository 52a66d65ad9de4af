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

#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cmip/entanglement.hpp"
#include "cmip/errors.hpp"
#include "cmip/interferometer.hpp"
#include "cmip/io.hpp"
#include "cmip/rng.hpp"
#include "cmip/tomography.hpp"
#include "cmip/verify.hpp"

namespace cmip::cli {

namespace {

using io::format_real;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
    const std::string t = trim(text);
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || end != t.data() + t.size()) {
        throw InvalidArgument(std::string(what) + " must be a non-negative integer, got '" +
                              std::string(text) + "'");
    }
    return v;
}

std::string optional_real(const std::optional<double>& x) {
    return x ? format_real(*x) : std::string();
}

}  // namespace

std::optional<std::uint64_t> parse_shots(std::string_view text) {
    if (trim(text) == "exact") {
        return std::nullopt;
    }
    return parse_u64(text, "shots");
}

std::uint64_t parse_seed(std::string_view text) { return parse_u64(text, "seed"); }

std::uint64_t default_seed() {
    const char* env = std::getenv(kSeedEnv);
    return env == nullptr ? 0 : parse_seed(env);
}

std::string cmip_csv(const CmipArgs& args) {
    std::ostringstream os;
    os << "# seed=" << args.seed << '\n';
    os << "alpha_rad,beta_rad,p_closed_form,p_monte_carlo,shots,seed\n";
    const auto betas = args.beta.grid();
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const double beta = betas[i];
        const std::uint64_t point_seed = derive_seed(args.seed, i);
        os << format_real(args.alpha) << ',' << format_real(beta) << ','
           << format_real(closed_form_probability(args.alpha, beta)) << ',';
        if (args.shots > 0) {
            const auto plan = CmipPlan::solve(args.alpha, beta);
            const auto counts = sample_runs(Sign::Plus, plan, args.shots, point_seed, args.workers);
            os << format_real(static_cast<double>(counts.success) / static_cast<double>(counts.shots));
        }
        os << ',' << args.shots << ',' << point_seed << '\n';
    }
    return os.str();
}

EntangleTables entangle_csv(const EntangleArgs& args) {
    if (args.alphas.empty()) {
        throw InvalidArgument("entangle needs at least one input angle");
    }
    const auto gammas = args.gamma1.grid();
    std::ostringstream prob;
    prob << "# seed=" << args.seed << '\n';
    prob << "E_in,alpha_rad,gamma1_rad,gamma2_rad,n1_closed,n1_sim\n";
    for (double alpha : args.alphas) {
        const double e_in = std::abs(std::sin(alpha));
        const auto state = prepare_two_photon({alpha, args.delta});
        for (double g1 : gammas) {
            const double n1 = branch_probabilities(alpha, g1, args.gamma2).first;
            const double n1_state = apply_cmip_signal(state, g1, args.gamma2).n1;
            prob << format_real(e_in) << ',' << format_real(alpha) << ',' << format_real(g1) << ','
                 << format_real(args.gamma2) << ',' << format_real(n1) << ',' << format_real(n1_state)
                 << '\n';
        }
    }

    const double alpha = args.alphas.front();
    const double e_in = std::abs(std::sin(alpha));
    const auto state = prepare_two_photon({alpha, args.delta});
    std::ostringstream ent;
    ent << "# seed=" << args.seed << '\n';
    ent << "# E_in=" << format_real(e_in) << '\n';
    ent << "gamma1_rad,e1_closed,e1_from_state,n1\n";
    for (double g1 : gammas) {
        const auto closed = output_entanglement(e_in, g1, args.gamma2, alpha);
        const auto branches = apply_cmip_signal(state, g1, args.gamma2);
        ent << format_real(g1) << ',' << optional_real(closed.e1) << ',' << optional_real(branches.e1)
            << ',' << format_real(branches.n1) << '\n';
    }
    return {prob.str(), ent.str()};
}

StateVector parse_state_spec(std::string_view spec) {
    const std::string s = trim(spec);
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') {
        throw InvalidArgument("state spec must look like name(args), got '" + s + "'");
    }
    const std::string name = trim(std::string_view(s).substr(0, open));
    std::vector<std::string> args;
    {
        std::string_view rest = std::string_view(s).substr(open + 1, s.size() - open - 2);
        while (true) {
            const auto comma = rest.find(',');
            args.push_back(trim(rest.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
    }
    auto expect = [&](std::size_t n) {
        if (args.size() != n) {
            throw InvalidArgument(name + " takes " + std::to_string(n) + " argument(s)");
        }
    };
    auto parse_sign = [](const std::string& t) {
        if (t == "+" || t == "+1" || t == "plus") {
            return Sign::Plus;
        }
        if (t == "-" || t == "-1" || t == "minus") {
            return Sign::Minus;
        }
        throw InvalidArgument("sign must be + or -, got '" + t + "'");
    };

    if (name == "psi_plus" || name == "phi_plus") {
        expect(1);
        return polarization_pair_state(parse_angle(args[0]), Sign::Plus);
    }
    if (name == "psi_minus" || name == "phi_minus") {
        expect(1);
        return polarization_pair_state(parse_angle(args[0]), Sign::Minus);
    }
    if (name == "psi_pm" || name == "phi_pm") {
        expect(2);
        return polarization_pair_state(parse_angle(args[0]), parse_sign(args[1]));
    }
    if (name == "two_photon") {
        if (args.size() != 1 && args.size() != 2) {
            throw InvalidArgument("two_photon takes (alpha) or (alpha, delta)");
        }
        const double delta = args.size() == 2 ? parse_angle(args[1]) : 0.0;
        const auto full = prepare_two_photon({parse_angle(args[0]), delta});
        return *postselect(full, labels::kSignalPath, "1").state;
    }
    throw InvalidArgument("unknown state constructor '" + name + "'");
}

std::string tomo_json(const TomoArgs& args) {
    const StateVector target = parse_state_spec(args.state);
    const auto counts = simulate_counts(DensityMatrix::pure(target), args.shots, args.seed);
    io::json out;
    out["state"] = args.state;
    out["shots"] = args.shots ? io::json(*args.shots) : io::json("exact");
    out["seed"] = args.seed;
    const io::json report = io::tomo_report_to_json(reconstruct(counts, target));
    for (const auto& [key, value] : report.items()) {
        out[key] = value;
    }
    return out.dump(2) + "\n";
}

EvePolicy parse_eve(std::string_view text) {
    const std::string t = trim(text);
    if (t == "none") {
        return EvePolicy::None;
    }
    if (t == "hv") {
        return EvePolicy::InterceptHV;
    }
    if (t == "da") {
        return EvePolicy::InterceptDA;
    }
    if (t == "random" || t == "intercept") {
        return EvePolicy::InterceptRandom;
    }
    throw InvalidArgument("eve must be none, hv, da, random or intercept; got '" + t + "'");
}

QkdResult qkd_run(const QkdConfig& cfg, bool with_log, unsigned workers) {
    std::vector<PulseRecord> log;
    const auto stats = run_session(cfg, with_log ? &log : nullptr, workers);
    QkdResult r;
    r.stats_json = io::session_stats_to_json(stats).dump(2) + "\n";
    if (with_log) {
        r.pulse_csv = "# seed=" + std::to_string(cfg.seed) + "\n" + io::pulse_log_to_csv(log);
    }
    return r;
}

bool verify_report(const VerifyArgs& args, std::string& report) {
    auto options = verify::default_options();
    options.seed = args.seed;
    if (args.perturb_gamma1 != 0.0) {
        const double eps = args.perturb_gamma1;
        options.gamma1_solver = [eps](double a, double b) { return solve_gamma1(a, b) + eps; };
    }
    const auto results = verify::run_all(options);
    std::ostringstream os;
    bool all = true;
    double total = 0.0;
    for (const auto& r : results) {
        char line[512];
        std::snprintf(line, sizeof line, "%-4s %-15s %-45s %8.3fs  %s\n", r.passed ? "PASS" : "FAIL",
                      r.module.c_str(), r.name.c_str(), r.seconds, r.detail.c_str());
        os << line;
        all = all && r.passed;
        total += r.seconds;
    }
    os << (all ? "all checks passed" : "some checks FAILED") << " in " << format_real(total) << " s\n";
    report = os.str();
    return all;
}

}  // namespace cmip::cli
