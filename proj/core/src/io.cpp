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

#include "cmip/io.hpp"

#include <cstdio>
#include <sstream>

#include "cmip/errors.hpp"

namespace cmip::io {

json basis_to_json(const ModeBasis& basis) {
    json out = json::array();
    for (const auto& f : basis.factors()) {
        out.push_back({{"label", f.label}, {"symbols", f.symbols}});
    }
    return out;
}

ModeBasis basis_from_json(const json& j) {
    if (!j.is_array()) {
        throw InvalidArgument("basis must be a JSON array");
    }
    std::vector<Factor> factors;
    for (const auto& f : j) {
        factors.push_back(
            {f.at("label").get<std::string>(), f.at("symbols").get<std::vector<std::string>>()});
    }
    return ModeBasis(std::move(factors));
}

json state_to_json(const StateVector& state) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
        const complex a = state.amplitudes()[i];
        amps.push_back({a.real(), a.imag()});
    }
    return {{"basis", basis_to_json(state.basis())}, {"amplitudes", std::move(amps)}};
}

StateVector state_from_json(const json& j) {
    ModeBasis basis = basis_from_json(j.at("basis"));
    const auto& amps = j.at("amplitudes");
    if (!amps.is_array() || amps.size() != basis.dimension()) {
        throw InvalidArgument("amplitude count does not match basis dimension");
    }
    CVector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = {amps[i].at(0).get<double>(), amps[i].at(1).get<double>()};
    }
    return StateVector::normalized(std::move(basis), std::move(v));
}

json matrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            row.push_back({m(i, k).real(), m(i, k).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json density_to_json(const DensityMatrix& rho) {
    return {{"basis", basis_to_json(rho.basis())}, {"matrix", matrix_to_json(rho.matrix())}};
}

json tomo_report_to_json(const TomoReport& report) {
    json out = {{"rho_hat", density_to_json(report.rho_hat)}};
    out["fidelity_vs_target"] =
        report.fidelity_vs_target ? json(*report.fidelity_vs_target) : json(nullptr);
    out["concurrence"] = report.concurrence ? json(*report.concurrence) : json(nullptr);
    out["residual"] = report.residual;
    return out;
}

json session_stats_to_json(const SessionStats& stats) {
    json out;
    out["n_pulses"] = stats.n_pulses;
    out["sifted_key_length"] = stats.sifted_key_length;
    out["conclusive_rate"] = stats.conclusive_rate;
    out["qber"] = stats.qber ? json(*stats.qber) : json(nullptr);
    out["monitor_click_rate"] = stats.monitor_click_rate;
    out["seed"] = stats.seed;
    return out;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string counts_to_csv(const CountsTable& counts) {
    std::ostringstream os;
    os << "setting,count,shots,seed\n";
    for (const auto& e : counts.entries) {
        os << e.setting << ',';
        if (counts.exact()) {
            os << format_real(e.frequency) << ",exact,";
        } else {
            os << e.count << ',' << *counts.shots_per_setting << ',';
        }
        os << counts.seed << '\n';
    }
    return os.str();
}

std::string pulse_log_to_csv(const std::vector<PulseRecord>& log) {
    std::ostringstream os;
    os << "pulse,alice_bit,alice_output,bob_guess,result,bit\n";
    for (const auto& r : log) {
        const bool conclusive = r.result.kind == BobResult::Kind::Conclusive;
        os << r.pulse << ',' << r.alice_bit << ',' << r.alice_output << ',' << r.bob_guess << ','
           << (conclusive ? "conclusive" : "monitor") << ',';
        if (conclusive) {
            os << r.result.bit;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace cmip::io
