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

#include "angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "cmip/errors.hpp"

namespace cmip::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_number(std::string_view s, std::string_view whole) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
        throw InvalidArgument("not an angle: '" + std::string(whole) + "'");
    }
    return v;
}

bool consume_suffix(std::string_view& s, std::string_view suffix) {
    if (s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix) {
        s.remove_suffix(suffix.size());
        return true;
    }
    return false;
}

bool consume_prefix(std::string_view& s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) == prefix) {
        s.remove_prefix(prefix.size());
        return true;
    }
    return false;
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string_view s = trim(text);
    double sign = 1.0;
    if (consume_prefix(s, "-")) {
        sign = -1.0;
    } else {
        consume_prefix(s, "+");
    }

    double value = 0.0;
    if (consume_prefix(s, "asin(") || consume_prefix(s, "arcsin(")) {
        if (!consume_suffix(s, ")")) {
            throw InvalidArgument("unclosed asin in '" + std::string(text) + "'");
        }
        const double x = parse_number(trim(s), text);
        if (x < -1.0 || x > 1.0) {
            throw InvalidArgument("asin argument outside [-1, 1] in '" + std::string(text) + "'");
        }
        value = std::asin(x);
    } else if (consume_suffix(s, "pi")) {
        s = trim(s);
        consume_suffix(s, "*");
        double factor = 1.0;
        if (const auto slash = s.find('/'); slash != std::string_view::npos) {
            const double p = parse_number(s.substr(0, slash), text);
            const double q = parse_number(s.substr(slash + 1), text);
            if (q == 0.0) {
                throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
            }
            factor = p / q;
        } else if (!s.empty()) {
            factor = parse_number(s, text);
        }
        value = factor * std::numbers::pi;
    } else {
        value = parse_number(s, text);
    }

    value *= sign;
    if (!std::isfinite(value)) {
        throw InvalidArgument("angle is not finite: '" + std::string(text) + "'");
    }
    return value;
}

std::string format_angle(double radians) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, radians);
    return std::string(buf, end);
}

SweepSpec SweepSpec::parse(std::string_view text) {
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos) {
        throw InvalidArgument("sweep must look like <start>:<stop>:<steps>, got '" + std::string(text) + "'");
    }
    SweepSpec spec;
    spec.start = parse_angle(text.substr(0, first));
    spec.stop = parse_angle(text.substr(first + 1, second - first - 1));
    const auto steps = trim(text.substr(second + 1));
    const auto [end, ec] = std::from_chars(steps.data(), steps.data() + steps.size(), spec.steps);
    if (steps.empty() || ec != std::errc() || end != steps.data() + steps.size() || spec.steps < 2) {
        throw InvalidArgument("sweep steps must be an integer >= 2, got '" + std::string(steps) + "'");
    }
    return spec;
}

std::vector<double> SweepSpec::grid() const {
    std::vector<double> g(static_cast<std::size_t>(steps));
    const double span = stop - start;
    for (int i = 0; i < steps; ++i) {
        g[static_cast<std::size_t>(i)] = start + span * i / (steps - 1);
    }
    g.back() = stop;
    return g;
}

}  // namespace cmip::cli
