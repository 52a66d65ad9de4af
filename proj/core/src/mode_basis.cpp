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

#include <algorithm>
#include <set>

#include "cmip/errors.hpp"
#include "cmip/qcore.hpp"

namespace cmip {

Factor Factor::polarization(std::string_view label) {
    return Factor{std::string(label), {"H", "V"}};
}

Factor Factor::path(std::string_view label) {
    return Factor{std::string(label), {"1", "2"}};
}

ModeBasis::ModeBasis(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::set<std::string> seen;
    for (const auto& f : factors_) {
        if (f.symbols.empty()) {
            throw BasisError("factor '" + f.label + "' has no basis symbols");
        }
        if (!seen.insert(f.label).second) {
            throw BasisError("duplicate factor label '" + f.label + "'");
        }
        std::set<std::string> syms(f.symbols.begin(), f.symbols.end());
        if (syms.size() != f.symbols.size()) {
            throw BasisError("factor '" + f.label + "' repeats a basis symbol");
        }
        dimension_ *= f.dimension();
    }
}

std::optional<std::size_t> ModeBasis::position(std::string_view label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t ModeBasis::require(std::string_view label) const {
    auto pos = position(label);
    if (!pos) {
        throw BasisError("unknown factor label '" + std::string(label) + "'");
    }
    return *pos;
}

std::size_t ModeBasis::index_of(std::span<const std::size_t> digits) const {
    if (digits.size() != factors_.size()) {
        throw BasisError("digit count does not match factor count");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (digits[i] >= factors_[i].dimension()) {
            throw BasisError("digit out of range for factor '" + factors_[i].label + "'");
        }
        index = index * factors_[i].dimension() + digits[i];
    }
    return index;
}

std::vector<std::size_t> ModeBasis::digits_of(std::size_t index) const {
    if (index >= dimension_) {
        throw BasisError("basis index out of range");
    }
    std::vector<std::size_t> digits(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        digits[i] = index % factors_[i].dimension();
        index /= factors_[i].dimension();
    }
    return digits;
}

std::size_t ModeBasis::index_of_symbols(std::span<const std::string> symbols) const {
    if (symbols.size() != factors_.size()) {
        throw BasisError("symbol count does not match factor count");
    }
    std::vector<std::size_t> digits(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& syms = factors_[i].symbols;
        auto it = std::find(syms.begin(), syms.end(), symbols[i]);
        if (it == syms.end()) {
            throw BasisError("unknown symbol '" + symbols[i] + "' for factor '" +
                             factors_[i].label + "'");
        }
        digits[i] = static_cast<std::size_t>(it - syms.begin());
    }
    return index_of(digits);
}

std::vector<std::string> ModeBasis::symbols_of(std::size_t index) const {
    auto digits = digits_of(index);
    std::vector<std::string> out(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        out[i] = factors_[i].symbols[digits[i]];
    }
    return out;
}

bool ModeBasis::disjoint(const ModeBasis& other) const {
    return std::none_of(factors_.begin(), factors_.end(),
                        [&](const Factor& f) { return other.position(f.label).has_value(); });
}

ModeBasis ModeBasis::concat(const ModeBasis& other) const {
    if (!disjoint(other)) {
        throw BasisError("cannot combine bases with overlapping factor labels");
    }
    auto factors = factors_;
    factors.insert(factors.end(), other.factors_.begin(), other.factors_.end());
    return ModeBasis(std::move(factors));
}

ModeBasis ModeBasis::select(std::span<const std::string> keep) const {
    for (const auto& label : keep) {
        require(label);
    }
    std::vector<Factor> kept;
    for (const auto& f : factors_) {
        if (std::find(keep.begin(), keep.end(), f.label) != keep.end()) {
            kept.push_back(f);
        }
    }
    return ModeBasis(std::move(kept));
}

ModeBasis ModeBasis::without(std::string_view label) const {
    const auto pos = require(label);
    auto factors = factors_;
    factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(pos));
    return ModeBasis(std::move(factors));
}

ModeBasis polarization_basis() {
    return ModeBasis({Factor::polarization(labels::kSignalPol)});
}

ModeBasis signal_basis() {
    return ModeBasis({Factor::polarization(labels::kSignalPol), Factor::path(labels::kSignalPath)});
}

ModeBasis two_photon_basis() {
    return ModeBasis({Factor::polarization(labels::kSignalPol), Factor::path(labels::kSignalPath),
                      Factor::polarization(labels::kIdlerPol)});
}

ModeBasis polarization_pair_basis() {
    return ModeBasis(
        {Factor::polarization(labels::kSignalPol), Factor::polarization(labels::kIdlerPol)});
}

}  // namespace cmip
