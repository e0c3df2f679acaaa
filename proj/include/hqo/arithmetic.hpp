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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hqo/statevector.hpp"

namespace hqo {

/// How reversible arithmetic is emitted: as elementary gates, or as one basis
/// oracle per block (the functional twin used for fast evaluation).
enum class GateMode { Gate, Oracle };

/// Qubits used to accumulate one constraint's left-hand side and flag its violation.
/// cost_qubits[0] is the least significant bit of the register.
struct CostRegisterLayout {
    std::vector<int> decision_qubits;
    std::vector<int> cost_qubits;
    int flag_qubit = -1;

    int width() const { return static_cast<int>(cost_qubits.size()); }

    /// Throws LayoutError if the qubit lists overlap or the register is empty.
    void validate() const;
};

/// Smallest register width able to hold every value in [0, max_value].
int register_width(std::int64_t max_value);

/// Adds sum_i weights[i] * x_i into a cost register that starts in |0>.
/// Gate mode prepares the Fourier-basis register with Hadamards (the transform of
/// |0>), applies one controlled phase per (decision qubit, register qubit) pair
/// whose phase is nonzero mod 2pi, and closes with the inverse transform.
/// Throws LayoutError on negative weights or when sum(weights) >= 2^width.
std::vector<Gate> build_cost_adder(std::span<const std::int64_t> weights, const CostRegisterLayout& layout,
                                   GateMode mode);

/// Flips the flag exactly where cost > threshold. Gate mode writes one MCX per
/// zero bit of the threshold (each matching a disjoint prefix pattern of the
/// values above it), conjugating 0-controls with X. The flag must start in |0>.
/// Throws LayoutError unless 0 <= threshold < 2^width.
std::vector<Gate> build_comparator(const CostRegisterLayout& layout, std::int64_t threshold, GateMode mode);

/// Reversed list of inverted gates. Throws ContractError on a projection.
std::vector<Gate> build_uncompute(std::span<const Gate> forward);

/// Quantum Fourier transform on `reg` (reg[0] least significant) without the
/// final swaps: register qubit j ends as (|0> + e^{2 pi i y / 2^(j+1)} |1>) / sqrt2.
std::vector<Gate> build_qft(std::span<const int> reg);

}  // namespace hqo
