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

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hqo/arithmetic.hpp"
#include "hqo/problem.hpp"
#include "hqo/statevector.hpp"

namespace hqo {

/// Order in which dephasing and Zeno blocks follow the phase return in each layer.
enum class BlockOrdering { Natural, ZenoFirst, DephaseFirst };

const char* to_string(BlockOrdering ordering);
BlockOrdering parse_ordering(std::string_view text);

/// Angles per layer and the number of Zeno measurements per Zeno block.
struct LayerParams {
    std::vector<double> gamma;
    std::vector<double> beta;
    int q_measurements = 1;

    int p_layers() const { return static_cast<int>(gamma.size()); }
    void validate() const;

    static LayerParams uniform(int p_layers, double gamma, double beta, int q_measurements = 1);
};

/// Qubit roles. Decision qubits come first (qubit i = variable i), then QAOA
/// slack bits in constraint order, then one cost register plus flag per distinct
/// register width among dephased/Zeno constraints. Constraints whose registers
/// have the same width share those qubits: every block uncomputes before the next.
struct HybridLayout {
    int n_decision = 0;
    int n_slack = 0;
    int n_qubits = 0;
    std::vector<std::vector<int>> slack_qubits;
    std::vector<std::optional<CostRegisterLayout>> registers;
    std::vector<int> ancilla_qubits;
    /// Targets of the per-layer global mixer: slack qubits plus decision qubits
    /// outside every Zeno constraint's support (Zeno blocks mix their own support).
    std::vector<int> mixer_qubits;

    /// Decision plus slack qubits.
    int n_core() const { return n_decision + n_slack; }
    /// Oracle-mode circuits never touch registers or flags, so they run on the
    /// core qubits alone; their states equal the ancilla-|0> slice of gate mode.
    int n_simulated(GateMode mode) const { return mode == GateMode::Oracle ? n_core() : n_qubits; }
};

/// Throws LayoutError when a dephased/Zeno constraint has negative coefficients
/// and CapacityError when the layout exceeds the simulator's qubit limit.
HybridLayout make_layout(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment);

struct HybridCircuit {
    HybridLayout layout;
    /// Initial-state preparation followed by the P layers.
    std::vector<Gate> gates;
    std::size_t body_begin = 0;
    /// Positions of the non-unitary elements (projections or post-selection oracles).
    std::vector<std::size_t> projection_positions;
    BlockOrdering ordering = BlockOrdering::Natural;
    GateMode mode = GateMode::Gate;
    int n_parameters = 0;

    std::span<const Gate> preparation() const { return std::span(gates).first(body_begin); }
    std::span<const Gate> body() const { return std::span(gates).subspan(body_begin); }
};

/// exp(-i gamma (H - identity)) for the Ising Hamiltonian. Gate mode emits one
/// RZ per field and one RZZ per coupling; because qubit value 1 is spin +1 and
/// Z|1> = -|1>, a field h on qubit i becomes RZ(-2 gamma h). Oracle mode emits a
/// single diagonal oracle with the same phases.
std::vector<Gate> build_phase_return(const IsingCoeffs& ising, double gamma, GateMode mode = GateMode::Gate);

/// H(x) - identity for every packed x < 2^n_bits; lets repeated oracle-mode
/// builds skip re-evaluating the Hamiltonian.
using EnergyTable = std::shared_ptr<const std::vector<double>>;
EnergyTable make_energy_table(const IsingCoeffs& ising);

/// Oracle-mode phase return reading a precomputed table.
std::vector<Gate> build_phase_return(const EnergyTable& table, int n_bits, double gamma);

/// Multiplies each branch by exp(-i theta alpha max(0, lhs - bound)) and returns
/// the register and flag to |0>: adder, comparator, flag-controlled phases,
/// inverse comparator, inverse adder. Oracle mode emits the net diagonal.
std::vector<Gate> build_dephasing_layer(const LinearConstraint& constraint, const CostRegisterLayout& layout,
                                        double alpha, double theta, GateMode mode);

struct ZenoLayer {
    std::vector<Gate> gates;
    std::vector<std::size_t> projections;  // indices into gates
};

/// q_measurements repetitions of: RX(beta / Q) on the constraint's support,
/// adder, comparator, post-select flag = 0, inverse comparator, inverse adder.
/// Oracle mode replaces the arithmetic and projection by one post-selection
/// onto the constraint's feasible decision states.
ZenoLayer build_zeno_layer(const LinearConstraint& constraint, const CostRegisterLayout& layout, double beta,
                           int q_measurements, GateMode mode);

/// Hadamards on decision and slack qubits, then for every Zeno constraint a
/// compute / post-select / uncompute pass that keeps only its feasible branches.
std::vector<Gate> build_preparation(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                                    const HybridLayout& layout, GateMode mode);

Statevector prepare_initial_state(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                                  const HybridLayout& layout, GateMode mode = GateMode::Oracle);

HybridCircuit build_circuit(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                            const Multipliers& mult, const LayerParams& params, BlockOrdering ordering,
                            GateMode mode);

/// Same as above, reusing an already compiled Ising Hamiltonian and layout, and
/// in oracle mode its energy table when one is given.
HybridCircuit build_circuit(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                            const Multipliers& mult, const LayerParams& params, BlockOrdering ordering,
                            GateMode mode, const IsingCoeffs& ising, const HybridLayout& layout,
                            const EnergyTable& table = nullptr);

/// Runs every gate, preparation included, on a fresh |0...0> state of
/// layout.n_simulated(mode) qubits.
Statevector run_circuit(const HybridCircuit& circuit);

struct CircuitStats {
    int non_local_gates = 0;
    int n_qubits = 0;
    int n_clbits = 0;
    int depth = 0;
    int width = 0;
    int size = 0;
    int n_parameters = 0;
    int n_unitary_factors = 0;
};

/// Gate-level complexity. Projections count as operations on their qubit plus
/// one classical bit each. Throws StatsUnavailableError if any gate is an oracle.
CircuitStats circuit_stats(std::span<const Gate> gates, int n_qubits, int n_parameters = 0);
CircuitStats circuit_stats(const HybridCircuit& circuit);

/// [{"kind": "...", "qubits": [...], "angle": x}, ...]
nlohmann::json circuit_to_json(std::span<const Gate> gates);

}  // namespace hqo
