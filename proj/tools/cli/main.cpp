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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "cmip/errors.hpp"
#include "commands.hpp"

namespace {

using namespace cmip::cli;

int emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return std::cout ? kOk : kIoError;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kIoError;
    }
    out << content;
    out.close();
    if (!out) {
        std::cerr << "error: failed writing '" << path << "'\n";
        return kIoError;
    }
    return kOk;
}

std::string sibling_path(const std::string& path, const std::string& tag) {
    const std::string ext = ".csv";
    if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
        return path.substr(0, path.size() - ext.size()) + tag + ext;
    }
    return path + tag;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conclusive inner-product modification: sweeps, tomography, QKD and self checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string seed_text;
    std::string out_path;
    app.add_option("--seed", seed_text, "64-bit seed (default: $CMIP_SEED, else 0)");
    app.add_option("--out", out_path, "Output file (default: stdout)");

    auto* cmip_cmd = app.add_subcommand("cmip", "Success probability versus beta, closed form and Monte Carlo");
    std::string alpha_text = "1/2pi";
    std::string beta_text = "0:pi:64";
    std::string shots_text = "100000";
    unsigned workers = 1;
    cmip_cmd->add_option("--alpha", alpha_text, "Input inner angle")->capture_default_str();
    cmip_cmd->add_option("--beta", beta_text, "Sweep <start>:<stop>:<steps>")->capture_default_str();
    cmip_cmd->add_option("--shots", shots_text, "Shots per point, 0 or exact for closed form only")
        ->capture_default_str();
    cmip_cmd->add_option("--workers", workers, "Sampling threads")->capture_default_str();

    auto* ent_cmd = app.add_subcommand("entangle", "Path-1 probability and entanglement versus gamma1");
    std::vector<std::string> e_texts;
    std::vector<std::string> alpha_texts;
    std::string delta_text = "0";
    std::string gamma2_text = "1/9pi";
    std::string gamma1_text = "0:1/4pi:91";
    std::string ent_out_path;
    ent_cmd->add_option("--E", e_texts, "Input concurrence(s) in [0, 1]");
    ent_cmd->add_option("--alpha", alpha_texts, "Input angle(s) instead of --E");
    ent_cmd->add_option("--delta", delta_text, "Relative phase of the pair")->capture_default_str();
    ent_cmd->add_option("--gamma2", gamma2_text, "Plate angle on V1")->capture_default_str();
    ent_cmd->add_option("--gamma1", gamma1_text, "Sweep <start>:<stop>:<steps>")->capture_default_str();
    ent_cmd->add_option("--out-entanglement", ent_out_path,
                        "Entanglement table (default: --out with _e1 suffix, or stdout)");

    auto* tomo_cmd = app.add_subcommand("tomo", "Simulated tomography of a named state");
    std::string state_text;
    std::string tomo_shots = "exact";
    tomo_cmd->add_option("state", state_text, "e.g. psi_plus(1/4pi), two_photon(asin(0.51), 0)")->required();
    tomo_cmd->add_option("--shots", tomo_shots, "Shots per setting or exact")->capture_default_str();

    auto* qkd_cmd = app.add_subcommand("qkd", "Key distribution session");
    std::string g1_text = "1/8pi";
    std::string g2_text = "1/8pi";
    std::string g0_text = "1/8pi";
    std::uint64_t pulses = 10000;
    std::string eve_text = "none";
    std::string log_path;
    unsigned qkd_workers = 1;
    qkd_cmd->add_option("--gamma1", g1_text, "Alice plate on H1")->capture_default_str();
    qkd_cmd->add_option("--gamma2", g2_text, "Alice plate on V1")->capture_default_str();
    qkd_cmd->add_option("--gamma0", g0_text, "Encoding plate magnitude, +-pi/8")->capture_default_str();
    qkd_cmd->add_option("--pulses", pulses, "Number of pulses")->capture_default_str();
    qkd_cmd->add_option("--eve", eve_text, "none, hv, da, random (alias intercept)")->capture_default_str();
    qkd_cmd->add_option("--log", log_path, "Per-pulse CSV log");
    qkd_cmd->add_option("--workers", qkd_workers, "Simulation threads")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
    double perturb = 0.0;
    verify_cmd->add_option("--perturb-gamma1", perturb, "Offset added to the plate solver (fault injection)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const std::uint64_t seed = seed_text.empty() ? default_seed() : parse_seed(seed_text);

        if (cmip_cmd->parsed()) {
            CmipArgs args;
            args.alpha = parse_angle(alpha_text);
            args.beta = SweepSpec::parse(beta_text);
            args.shots = parse_shots(shots_text).value_or(0);
            args.seed = seed;
            args.workers = workers == 0 ? 1 : workers;
            return emit(out_path, cmip_csv(args));
        }
        if (ent_cmd->parsed()) {
            EntangleArgs args;
            if (!e_texts.empty() && !alpha_texts.empty()) {
                throw cmip::InvalidArgument("give --E or --alpha, not both");
            }
            for (const auto& t : e_texts) {
                const double e = parse_angle(t);
                if (e < 0.0 || e > 1.0) {
                    throw cmip::InvalidArgument("E must lie in [0, 1], got " + t);
                }
                args.alphas.push_back(std::asin(e));
            }
            for (const auto& t : alpha_texts) {
                args.alphas.push_back(parse_angle(t));
            }
            if (args.alphas.empty()) {
                args.alphas = {std::asin(0.51)};
            }
            args.delta = parse_angle(delta_text);
            args.gamma2 = parse_angle(gamma2_text);
            args.gamma1 = SweepSpec::parse(gamma1_text);
            args.seed = seed;
            const auto tables = entangle_csv(args);
            if (out_path.empty() && ent_out_path.empty()) {
                return emit("", tables.probability + "\n" + tables.entanglement);
            }
            const std::string second = ent_out_path.empty() ? sibling_path(out_path, "_e1") : ent_out_path;
            if (const int rc = emit(out_path, tables.probability); rc != kOk) {
                return rc;
            }
            return emit(second, tables.entanglement);
        }
        if (tomo_cmd->parsed()) {
            TomoArgs args;
            args.state = state_text;
            args.shots = parse_shots(tomo_shots);
            if (args.shots && *args.shots == 0) {
                throw cmip::InvalidArgument("tomography needs shots > 0 or exact");
            }
            args.seed = seed;
            return emit(out_path, tomo_json(args));
        }
        if (qkd_cmd->parsed()) {
            cmip::QkdConfig cfg;
            cfg.gamma1 = parse_angle(g1_text);
            cfg.gamma2 = parse_angle(g2_text);
            cfg.gamma0 = parse_angle(g0_text);
            cfg.n_pulses = pulses;
            cfg.seed = seed;
            cfg.eve = parse_eve(eve_text);
            cfg.validate();
            const auto result = qkd_run(cfg, !log_path.empty(), qkd_workers == 0 ? 1 : qkd_workers);
            if (!log_path.empty()) {
                if (const int rc = emit(log_path, result.pulse_csv); rc != kOk) {
                    return rc;
                }
            }
            return emit(out_path, result.stats_json);
        }
        if (verify_cmd->parsed()) {
            VerifyArgs args;
            args.perturb_gamma1 = perturb;
            if (!seed_text.empty()) {
                args.seed = seed;
            }
            std::string report;
            const bool ok = verify_report(args, report);
            const int rc = emit(out_path, report);
            if (rc != kOk) {
                return rc;
            }
            return ok ? kOk : kVerifyFailed;
        }
    } catch (const cmip::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
