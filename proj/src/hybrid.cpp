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

#include "hqo/hybrid.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <numeric>

#include "hqo/error.hpp"

namespace hqo {

namespace {

std::vector<std::int64_t> support_weights(const LinearConstraint& constraint, const CostRegisterLayout& layout) {
    std::vector<std::int64_t> w;
    w.reserve(layout.decision_qubits.size());
    for (int q : layout.decision_qubits) w.push_back(constraint.coeffs.at(static_cast<std::size_t>(q)));
    return w;
}

// Flag <- [register > bound]. A negative bound is violated everywhere; a bound
// at or above the register's range is never violated.
std::vector<Gate> flag_gates(const CostRegisterLayout& layout, std::int64_t bound) {
    if (bound < 0) return {Gate::x(layout.flag_qubit)};
    const std::int64_t top = (std::int64_t{1} << layout.width()) - 1;
    return build_comparator(layout, std::min(bound, top), GateMode::Gate);
}

void append_to(std::vector<Gate>& out, std::span<const Gate> gates) {
    out.insert(out.end(), gates.begin(), gates.end());
}

struct ConstraintBlock {
    std::vector<Gate> compute;
    std::vector<Gate> uncompute;
};

// Constraint lhs read straight from the decision bits.
std::function<std::int64_t(std::uint64_t)> decision_lhs(const LinearConstraint& constraint,
                                                        const CostRegisterLayout& layout) {
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
    for (int q : layout.decision_qubits) {
        terms.emplace_back(std::uint64_t{1} << q, constraint.coeffs.at(static_cast<std::size_t>(q)));
    }
    return [terms = std::move(terms)](std::uint64_t z) {
        std::int64_t total = 0;
        for (const auto& [bit, w] : terms) {
            if (z & bit) total += w;
        }
        return total;
    };
}

// Adder then comparator: the register ends holding lhs and the flag marks violation.
ConstraintBlock compute_flag(const LinearConstraint& constraint, const CostRegisterLayout& layout) {
    ConstraintBlock block;
    block.compute = build_cost_adder(support_weights(constraint, layout), layout, GateMode::Gate);
    append_to(block.compute, flag_gates(layout, constraint.bound));
    block.uncompute = build_uncompute(block.compute);
    return block;
}

// Keeps the branches that satisfy the constraint. Gate mode computes the flag,
// post-selects it on 0 and uncomputes; oracle mode post-selects directly on the
// decision bits and never touches the register or flag. Returns the position of
// the post-selecting element within `out`.
std::size_t append_feasibility_filter(std::vector<Gate>& out, const LinearConstraint& constraint,
                                      const CostRegisterLayout& layout, GateMode mode) {
    if (mode == GateMode::Oracle) {
        out.push_back(Gate::postselect_oracle(
            "feasible", layout.decision_qubits,
            [lhs = decision_lhs(constraint, layout), bound = constraint.bound](std::uint64_t z) {
                return lhs(z) <= bound;
            }));
        return out.size() - 1;
    }
    const ConstraintBlock block = compute_flag(constraint, layout);
    append_to(out, block.compute);
    const std::size_t pos = out.size();
    out.push_back(Gate::project(layout.flag_qubit, 0));
    append_to(out, block.uncompute);
    return pos;
}


}  // namespace

const char* to_string(BlockOrdering ordering) {
    switch (ordering) {
        case BlockOrdering::Natural: return "natural";
        case BlockOrdering::ZenoFirst: return "zeno_first";
        case BlockOrdering::DephaseFirst: return "dephase_first";
    }
    return "?";
}

BlockOrdering parse_ordering(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    std::replace(t.begin(), t.end(), '-', '_');
    if (t == "natural") return BlockOrdering::Natural;
    if (t == "zeno_first") return BlockOrdering::ZenoFirst;
    if (t == "dephase_first" || t == "dephasing_first") return BlockOrdering::DephaseFirst;
    throw InputError("unknown ordering '" + std::string(text) + "'");
}

void LayerParams::validate() const {
    if (gamma.empty()) throw InputError("need at least one layer");
    if (beta.size() != gamma.size()) throw InputError("gamma and beta must have one entry per layer");
    if (q_measurements < 1) throw InputError("need at least one Zeno measurement per block");
}

LayerParams LayerParams::uniform(int p_layers, double gamma, double beta, int q_measurements) {
    return {std::vector<double>(static_cast<std::size_t>(std::max(p_layers, 0)), gamma),
            std::vector<double>(static_cast<std::size_t>(std::max(p_layers, 0)), beta), q_measurements};
}

HybridLayout make_layout(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment) {
    if (assignment.size() != problem.constraints.size()) {
        throw InputError("assignment length does not match the number of constraints");
    }
    HybridLayout layout;
    layout.n_decision = problem.n_vars();
    layout.slack_qubits.resize(problem.constraints.size());
    layout.registers.resize(problem.constraints.size());
    int next = layout.n_decision;
    for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
        if (assignment[j] != Representation::Qaoa) continue;
        const int w = slack_width(problem.constraints[j]);
        for (int k = 0; k < w; ++k) layout.slack_qubits[j].push_back(next++);
    }
    layout.n_slack = next - layout.n_decision;

    // One register + flag per distinct width, in order of first use.
    std::map<int, std::pair<std::vector<int>, int>> pool;
    std::vector<bool> zeno_support(static_cast<std::size_t>(layout.n_decision), false);
    for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
        if (assignment[j] == Representation::Qaoa) continue;
        const auto& c = problem.constraints[j];
        CostRegisterLayout reg;
        for (int i = 0; i < layout.n_decision; ++i) {
            if (c.coeffs[i] < 0) {
                throw LayoutError("constraint '" + c.label + "' has negative coefficients; only QAOA can encode it");
            }
            if (c.coeffs[i] != 0) {
                reg.decision_qubits.push_back(i);
                if (assignment[j] == Representation::Zeno) zeno_support[i] = true;
            }
        }
        const int width = register_width(c.max_lhs());
        auto it = pool.find(width);
        if (it == pool.end()) {
            std::vector<int> qubits(static_cast<std::size_t>(width));
            std::iota(qubits.begin(), qubits.end(), next);
            next += width;
            it = pool.emplace(width, std::make_pair(std::move(qubits), next++)).first;
            layout.ancilla_qubits.insert(layout.ancilla_qubits.end(), it->second.first.begin(),
                                         it->second.first.end());
            layout.ancilla_qubits.push_back(it->second.second);
        }
        reg.cost_qubits = it->second.first;
        reg.flag_qubit = it->second.second;
        reg.validate();
        layout.registers[j] = std::move(reg);
    }
    layout.n_qubits = next;
    if (layout.n_qubits > Statevector::kMaxQubits) {
        throw CapacityError("layout needs " + std::to_string(layout.n_qubits) + " qubits");
    }
    for (int i = 0; i < layout.n_decision; ++i) {
        if (!zeno_support[i]) layout.mixer_qubits.push_back(i);
    }
    for (int q = layout.n_decision; q < layout.n_decision + layout.n_slack; ++q) layout.mixer_qubits.push_back(q);
    return layout;
}

EnergyTable make_energy_table(const IsingCoeffs& ising) {
    if (ising.n_bits > 30) throw CapacityError("phase-return table too large");
    auto table = std::make_shared<std::vector<double>>(std::size_t{1} << ising.n_bits);
    for (std::uint64_t x = 0; x < table->size(); ++x) (*table)[x] = ising.value(x) - ising.identity;
    return table;
}

std::vector<Gate> build_phase_return(const EnergyTable& table, int n_bits, double gamma) {
    if (!table || table->size() != (std::size_t{1} << n_bits)) throw ShapeError("energy table size mismatch");
    const std::uint64_t mask = table->size() - 1;
    std::vector<int> qubits(static_cast<std::size_t>(n_bits));
    std::iota(qubits.begin(), qubits.end(), 0);
    return {Gate::diagonal_oracle("phase_return", std::move(qubits),
                                  [table, mask, gamma](std::uint64_t z) { return -gamma * (*table)[z & mask]; })};
}

std::vector<Gate> build_phase_return(const IsingCoeffs& ising, double gamma, GateMode mode) {
    if (mode == GateMode::Oracle) {
        if (ising.z.empty() && ising.zz.empty()) return {};
        return build_phase_return(make_energy_table(ising), ising.n_bits, gamma);
    }
    std::vector<Gate> out;
    for (const auto& [i, h] : ising.z) {
        if (h != 0.0) out.push_back(Gate::rz(i, -2.0 * gamma * h));
    }
    for (const auto& [ij, j] : ising.zz) {
        if (j != 0.0) out.push_back(Gate::rzz(ij.first, ij.second, 2.0 * gamma * j));
    }
    return out;
}

std::vector<Gate> build_dephasing_layer(const LinearConstraint& constraint, const CostRegisterLayout& layout,
                                        double alpha, double theta, GateMode mode) {
    const double rate = theta * alpha;
    const auto bound = static_cast<double>(constraint.bound);
    if (mode == GateMode::Oracle) {
        // Compute, phase and uncompute collapse into one diagonal on the decision bits.
        return {Gate::diagonal_oracle("dephase", layout.decision_qubits,
                                      [lhs = decision_lhs(constraint, layout), rate, bound](std::uint64_t z) {
                                          const double excess = static_cast<double>(lhs(z)) - bound;
                                          return excess > 0.0 ? -rate * excess : 0.0;
                                      })};
    }
    const ConstraintBlock block = compute_flag(constraint, layout);
    std::vector<Gate> out = block.compute;
    for (int k = 0; k < layout.width(); ++k) {
        out.push_back(Gate::cphase({layout.flag_qubit, layout.cost_qubits[k]},
                                   -rate * static_cast<double>(std::uint64_t{1} << k)));
    }
    out.push_back(Gate::cphase({layout.flag_qubit}, rate * bound));
    append_to(out, block.uncompute);
    return out;
}

ZenoLayer build_zeno_layer(const LinearConstraint& constraint, const CostRegisterLayout& layout, double beta,
                           int q_measurements, GateMode mode) {
    if (q_measurements < 1) throw InputError("need at least one Zeno measurement");
    ZenoLayer layer;
    const double sub_angle = beta / q_measurements;
    for (int r = 0; r < q_measurements; ++r) {
        for (int q : layout.decision_qubits) layer.gates.push_back(Gate::rx(q, sub_angle));
        layer.projections.push_back(append_feasibility_filter(layer.gates, constraint, layout, mode));
    }
    return layer;
}

std::vector<Gate> build_preparation(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                                    const HybridLayout& layout, GateMode mode) {
    std::vector<Gate> out;
    for (int q = 0; q < layout.n_core(); ++q) out.push_back(Gate::h(q));
    for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
        if (assignment[j] != Representation::Zeno) continue;
        append_feasibility_filter(out, problem.constraints[j], *layout.registers[j], mode);
    }
    return out;
}

Statevector prepare_initial_state(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                                  const HybridLayout& layout, GateMode mode) {
    Statevector state(layout.n_simulated(mode));
    apply_gates(state, build_preparation(problem, assignment, layout, mode));
    return state;
}

HybridCircuit build_circuit(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                            const Multipliers& mult, const LayerParams& params, BlockOrdering ordering,
                            GateMode mode) {
    const Qubo qubo = compile_qubo(problem, assignment, mult);
    return build_circuit(problem, assignment, mult, params, ordering, mode, qubo_to_ising(qubo),
                         make_layout(problem, assignment));
}

HybridCircuit build_circuit(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                            const Multipliers& mult, const LayerParams& params, BlockOrdering ordering,
                            GateMode mode, const IsingCoeffs& ising, const HybridLayout& layout,
                            const EnergyTable& table) {
    params.validate();
    mult.validate(problem);
    if (assignment.size() != problem.constraints.size()) {
        throw InputError("assignment length does not match the number of constraints");
    }

    std::vector<std::size_t> order;
    auto take = [&](auto pred) {
        for (std::size_t j = 0; j < assignment.size(); ++j) {
            if (pred(assignment[j])) order.push_back(j);
        }
    };
    switch (ordering) {
        case BlockOrdering::Natural:
            take([](Representation r) { return r != Representation::Qaoa; });
            break;
        case BlockOrdering::ZenoFirst:
            take([](Representation r) { return r == Representation::Zeno; });
            take([](Representation r) { return r == Representation::Dephase; });
            break;
        case BlockOrdering::DephaseFirst:
            take([](Representation r) { return r == Representation::Dephase; });
            take([](Representation r) { return r == Representation::Zeno; });
            break;
    }

    HybridCircuit circuit;
    circuit.layout = layout;
    circuit.ordering = ordering;
    circuit.mode = mode;
    circuit.n_parameters = 2 * params.p_layers();
    circuit.gates = build_preparation(problem, assignment, layout, mode);
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        if (!circuit.gates[i].is_unitary()) circuit.projection_positions.push_back(i);
    }
    circuit.body_begin = circuit.gates.size();

    for (int p = 0; p < params.p_layers(); ++p) {
        if (mode == GateMode::Oracle && table) {
            append_to(circuit.gates, build_phase_return(table, ising.n_bits, params.gamma[p]));
        } else {
            append_to(circuit.gates, build_phase_return(ising, params.gamma[p], mode));
        }
        for (std::size_t j : order) {
            const auto& reg = *layout.registers[j];
            const auto& c = problem.constraints[j];
            if (assignment[j] == Representation::Dephase) {
                append_to(circuit.gates, build_dephasing_layer(c, reg, mult.alpha, params.gamma[p], mode));
            } else {
                const ZenoLayer layer = build_zeno_layer(c, reg, params.beta[p], params.q_measurements, mode);
                const std::size_t offset = circuit.gates.size();
                for (std::size_t pos : layer.projections) circuit.projection_positions.push_back(offset + pos);
                append_to(circuit.gates, layer.gates);
            }
        }
        for (int q : layout.mixer_qubits) circuit.gates.push_back(Gate::rx(q, params.beta[p]));
    }
    return circuit;
}

Statevector run_circuit(const HybridCircuit& circuit) {
    Statevector state(circuit.layout.n_simulated(circuit.mode));
    apply_gates(state, circuit.gates);
    return state;
}

}  // namespace hqo
