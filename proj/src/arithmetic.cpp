// Copyright 2026 The hqo Authors
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

#include "hqo/arithmetic.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "hqo/error.hpp"

namespace hqo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t read_register(std::uint64_t z, std::span<const int> reg) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < reg.size(); ++b) v |= ((z >> reg[b]) & 1U) << b;
    return v;
}

std::uint64_t write_register(std::uint64_t z, std::span<const int> reg, std::uint64_t v) {
    for (std::size_t b = 0; b < reg.size(); ++b) {
        const std::uint64_t bit = std::uint64_t{1} << reg[b];
        z = ((v >> b) & 1U) ? (z | bit) : (z & ~bit);
    }
    return z;
}

std::vector<int> all_qubits(const CostRegisterLayout& layout, bool with_flag) {
    std::vector<int> q = layout.decision_qubits;
    q.insert(q.end(), layout.cost_qubits.begin(), layout.cost_qubits.end());
    if (with_flag) q.push_back(layout.flag_qubit);
    return q;
}

}  // namespace

void CostRegisterLayout::validate() const {
    if (cost_qubits.empty()) throw LayoutError("cost register has zero width");
    if (width() > 62) throw LayoutError("cost register wider than 62 bits");
    std::vector<int> all = decision_qubits;
    all.insert(all.end(), cost_qubits.begin(), cost_qubits.end());
    if (flag_qubit >= 0) all.push_back(flag_qubit);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw LayoutError("decision, cost and flag qubits must be disjoint");
    }
}

int register_width(std::int64_t max_value) {
    int width = 1;
    while (width < 62 && (std::int64_t{1} << width) <= max_value) ++width;
    return width;
}

std::vector<Gate> build_qft(std::span<const int> reg) {
    std::vector<Gate> out;
    const int m = static_cast<int>(reg.size());
    for (int i = m - 1; i >= 0; --i) {
        out.push_back(Gate::h(reg[i]));
        for (int l = i - 1; l >= 0; --l) {
            out.push_back(Gate::cphase({reg[l], reg[i]}, kTwoPi / static_cast<double>(std::uint64_t{1} << (i - l + 1))));
        }
    }
    return out;
}

std::vector<Gate> build_cost_adder(std::span<const std::int64_t> weights, const CostRegisterLayout& layout,
                                   GateMode mode) {
    layout.validate();
    if (weights.size() != layout.decision_qubits.size()) {
        throw LayoutError("adder needs one weight per decision qubit");
    }
    if (std::any_of(weights.begin(), weights.end(), [](std::int64_t w) { return w < 0; })) {
        throw LayoutError("adder weights must be non-negative");
    }
    const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    const int m = layout.width();
    if (total >= (std::int64_t{1} << m)) {
        throw LayoutError("sum of weights " + std::to_string(total) + " overflows a " + std::to_string(m) +
                          "-bit register");
    }

    if (mode == GateMode::Oracle) {
        const std::uint64_t modulus_mask = (std::uint64_t{1} << m) - 1;
        auto sum_of = [w = std::vector<std::int64_t>(weights.begin(), weights.end()),
                       dec = layout.decision_qubits](std::uint64_t z) {
            std::uint64_t s = 0;
            for (std::size_t i = 0; i < dec.size(); ++i) {
                if ((z >> dec[i]) & 1U) s += static_cast<std::uint64_t>(w[i]);
            }
            return s;
        };
        auto shift = [sum_of, reg = layout.cost_qubits, modulus_mask](std::uint64_t z, bool add) {
            const std::uint64_t cur = read_register(z, reg);
            const std::uint64_t s = sum_of(z);
            const std::uint64_t next = add ? (cur + s) & modulus_mask : (cur - s) & modulus_mask;
            return write_register(z, reg, next);
        };
        return {Gate::permutation_oracle(
            "adder", all_qubits(layout, false), [shift](std::uint64_t z) { return shift(z, true); },
            [shift](std::uint64_t z) { return shift(z, false); })};
    }

    std::vector<Gate> out;
    for (int q : layout.cost_qubits) out.push_back(Gate::h(q));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0) continue;
        for (int j = 0; j < m; ++j) {
            const std::uint64_t period = std::uint64_t{1} << (j + 1);
            const std::uint64_t r = static_cast<std::uint64_t>(weights[i]) % period;
            if (r == 0) continue;
            out.push_back(Gate::cphase({layout.decision_qubits[i], layout.cost_qubits[j]},
                                       kTwoPi * static_cast<double>(r) / static_cast<double>(period)));
        }
    }
    const auto qft = build_qft(layout.cost_qubits);
    const auto iqft = build_uncompute(qft);
    out.insert(out.end(), iqft.begin(), iqft.end());
    return out;
}

std::vector<Gate> build_comparator(const CostRegisterLayout& layout, std::int64_t threshold, GateMode mode) {
    layout.validate();
    if (layout.flag_qubit < 0) throw LayoutError("comparator needs a flag qubit");
    const int m = layout.width();
    if (threshold < 0 || threshold >= (std::int64_t{1} << m)) {
        throw LayoutError("threshold " + std::to_string(threshold) + " outside a " + std::to_string(m) +
                          "-bit register");
    }
    const auto c = static_cast<std::uint64_t>(threshold);

    if (mode == GateMode::Oracle) {
        auto flip = [reg = layout.cost_qubits, flag = std::uint64_t{1} << layout.flag_qubit, c](std::uint64_t z) {
            return read_register(z, reg) > c ? (z ^ flag) : z;
        };
        std::vector<int> qubits = layout.cost_qubits;
        qubits.push_back(layout.flag_qubit);
        return {Gate::permutation_oracle("comparator", std::move(qubits), flip, flip)};
    }

    std::vector<Gate> out;
    for (int j = 0; j < m; ++j) {
        if ((c >> j) & 1U) continue;
        // Values above c that first differ from c at bit j: c's bits above j, then a 1.
        std::vector<int> controls;
        std::vector<int> negated;
        for (int l = j; l < m; ++l) {
            controls.push_back(layout.cost_qubits[l]);
            if (l > j && !((c >> l) & 1U)) negated.push_back(layout.cost_qubits[l]);
        }
        for (int q : negated) out.push_back(Gate::x(q));
        if (controls.size() == 1) {
            out.push_back(Gate::cnot(controls[0], layout.flag_qubit));
        } else {
            out.push_back(Gate::mcx(controls, layout.flag_qubit));
        }
        for (int q : negated) out.push_back(Gate::x(q));
    }
    return out;
}

std::vector<Gate> build_uncompute(std::span<const Gate> forward) {
    std::vector<Gate> out;
    out.reserve(forward.size());
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) out.push_back(it->inverse());
    return out;
}

}  // namespace hqo
