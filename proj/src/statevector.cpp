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

#include "hqo/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hqo/error.hpp"

namespace hqo {

namespace {

#define HQO_DISPATCH(fn, ...)                                         \
    (kernels::default_backend() == kernels::Backend::Serial          \
         ? kernels::serial::fn(__VA_ARGS__)                           \
         : kernels::parallel::fn(__VA_ARGS__))

std::uint64_t mask_of(std::span<const int> qubits) {
    std::uint64_t m = 0;
    for (int q : qubits) m |= std::uint64_t{1} << q;
    return m;
}

void validate(const Gate& gate, int n_qubits) {
    std::size_t expected = 0;
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::RX:
        case GateKind::RZ:
        case GateKind::Project:
            expected = 1;
            break;
        case GateKind::RZZ:
        case GateKind::CNOT:
            expected = 2;
            break;
        default:
            break;
    }
    if (expected != 0 && gate.qubits.size() != expected) {
        throw ShapeError(std::string(to_string(gate.kind)) + " takes " + std::to_string(expected) + " qubit(s)");
    }
    if (gate.qubits.empty() && gate.kind != GateKind::Oracle) {
        throw ShapeError(std::string(to_string(gate.kind)) + " needs at least one qubit");
    }
    if (gate.kind == GateKind::Oracle && !gate.oracle) throw ShapeError("oracle gate without oracle");
    std::uint64_t seen = 0;
    for (int q : gate.qubits) {
        if (q < 0 || q >= n_qubits) {
            throw ShapeError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n_qubits) +
                             " qubits");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (seen & bit) throw ShapeError("repeated qubit index " + std::to_string(q));
        seen |= bit;
    }
}

}  // namespace

const char* to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::RX: return "RX";
        case GateKind::RZ: return "RZ";
        case GateKind::RZZ: return "RZZ";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CPHASE: return "CPHASE";
        case GateKind::MCX: return "MCX";
        case GateKind::Oracle: return "DIAGONAL_ORACLE";
        case GateKind::Project: return "PROJECT";
    }
    return "?";
}

Gate Gate::h(int q) { return {GateKind::H, {q}}; }
Gate Gate::x(int q) { return {GateKind::X, {q}}; }
Gate Gate::rx(int q, double theta) { return {GateKind::RX, {q}, theta}; }
Gate Gate::rz(int q, double theta) { return {GateKind::RZ, {q}, theta}; }
Gate Gate::rzz(int a, int b, double theta) { return {GateKind::RZZ, {a, b}, theta}; }
Gate Gate::cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }
Gate Gate::cphase(std::vector<int> qubits, double theta) { return {GateKind::CPHASE, std::move(qubits), theta}; }

Gate Gate::mcx(std::vector<int> controls, int target) {
    controls.push_back(target);
    return {GateKind::MCX, std::move(controls)};
}

Gate Gate::project(int q, int outcome) {
    Gate g{GateKind::Project, {q}};
    g.outcome = outcome;
    return g;
}

Gate Gate::diagonal_oracle(std::string label, std::vector<int> qubits, kernels::PhaseFn phase) {
    auto o = std::make_shared<BasisOracle>();
    o->label = std::move(label);
    o->phase = std::move(phase);
    Gate g{GateKind::Oracle, std::move(qubits)};
    g.oracle = std::move(o);
    return g;
}

Gate Gate::postselect_oracle(std::string label, std::vector<int> qubits, kernels::Predicate keep) {
    auto o = std::make_shared<BasisOracle>();
    o->label = std::move(label);
    o->keep = std::move(keep);
    Gate g{GateKind::Oracle, std::move(qubits)};
    g.oracle = std::move(o);
    return g;
}

Gate Gate::permutation_oracle(std::string label, std::vector<int> qubits, kernels::IndexMap forward,
                              kernels::IndexMap backward) {
    auto o = std::make_shared<BasisOracle>();
    o->label = std::move(label);
    o->forward = std::move(forward);
    o->backward = std::move(backward);
    Gate g{GateKind::Oracle, std::move(qubits)};
    g.oracle = std::move(o);
    return g;
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::MCX:
            break;
        case GateKind::RX:
        case GateKind::RZ:
        case GateKind::RZZ:
        case GateKind::CPHASE:
            g.angle = -angle;
            break;
        case GateKind::Oracle:
            if (oracle && oracle->is_postselection()) throw ContractError("post-selection has no inverse");
            g.inverted = !inverted;
            break;
        case GateKind::Project:
            throw ContractError("projection has no inverse");
    }
    return g;
}

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

void Statevector::assign(std::vector<Complex> amps) {
    if (amps.size() != amps_.size()) throw ShapeError("amplitude count does not match state dimension");
    amps_ = std::move(amps);
    const double n = HQO_DISPATCH(norm_squared, std::span<const Complex>(amps_));
    if (n <= kEmptySubspaceThreshold) throw EmptySubspaceError("cannot normalize a zero vector");
    const double s = 1.0 / std::sqrt(n);
    for (Complex& a : amps_) a *= s;
}

Statevector new_state(int n_qubits) { return Statevector(n_qubits); }

void apply_gate(Statevector& state, const Gate& gate) {
    validate(gate, state.n_qubits_);
    std::span<Complex> amps = state.amps_;
    const auto& q = gate.qubits;
    switch (gate.kind) {
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2;
            HQO_DISPATCH(apply_matrix, amps, q[0], kernels::Mat2{r, r, r, -r}, 0);
            break;
        }
        case GateKind::X:
            HQO_DISPATCH(apply_x, amps, q[0], 0);
            break;
        case GateKind::RX: {
            const double c = std::cos(gate.angle / 2);
            const double s = std::sin(gate.angle / 2);
            HQO_DISPATCH(apply_matrix, amps, q[0], (kernels::Mat2{c, {0, -s}, {0, -s}, c}), 0);
            break;
        }
        case GateKind::RZ:
            HQO_DISPATCH(apply_rz, amps, q[0], gate.angle);
            break;
        case GateKind::RZZ:
            HQO_DISPATCH(apply_rzz, amps, q[0], q[1], gate.angle);
            break;
        case GateKind::CNOT:
            HQO_DISPATCH(apply_x, amps, q[1], std::uint64_t{1} << q[0]);
            break;
        case GateKind::MCX: {
            const std::span<const int> controls(q.data(), q.size() - 1);
            HQO_DISPATCH(apply_x, amps, q.back(), mask_of(controls));
            break;
        }
        case GateKind::CPHASE:
            HQO_DISPATCH(apply_phase, amps, mask_of(q), std::polar(1.0, gate.angle));
            break;
        case GateKind::Oracle: {
            const BasisOracle& o = *gate.oracle;
            if (o.is_postselection()) {
                postselect(state, o.keep);
            } else if (o.is_diagonal()) {
                if (gate.inverted) {
                    HQO_DISPATCH(apply_diagonal, amps, [&o](std::uint64_t z) { return -o.phase(z); });
                } else {
                    HQO_DISPATCH(apply_diagonal, amps, o.phase);
                }
            } else {
                state.scratch_.resize(amps.size());
                HQO_DISPATCH(apply_permutation, amps, state.scratch_, gate.inverted ? o.backward : o.forward);
            }
            break;
        }
        case GateKind::Project:
            project_qubit(state, q[0], gate.outcome);
            break;
    }
}

void apply_gates(Statevector& state, std::span<const Gate> gates) {
    for (const Gate& g : gates) apply_gate(state, g);
}

double project_qubit(Statevector& state, int qubit, int outcome) {
    if (qubit < 0 || qubit >= state.n_qubits_) throw ShapeError("projection qubit out of range");
    const double p = HQO_DISPATCH(probability_of, std::span<const Complex>(state.amps_), qubit, outcome);
    if (p <= kEmptySubspaceThreshold) {
        throw EmptySubspaceError("post-selecting qubit " + std::to_string(qubit) + " on " + std::to_string(outcome) +
                                 " leaves probability " + std::to_string(p));
    }
    HQO_DISPATCH(project, std::span<Complex>(state.amps_), qubit, outcome, 1.0 / std::sqrt(p));
    state.survival_prob_ *= p;
    return p;
}

double postselect(Statevector& state, const kernels::Predicate& keep) {
    const double p = HQO_DISPATCH(mass_where, std::span<const Complex>(state.amps_), keep);
    if (p <= kEmptySubspaceThreshold) {
        throw EmptySubspaceError("post-selection leaves probability " + std::to_string(p));
    }
    HQO_DISPATCH(keep_where, std::span<Complex>(state.amps_), keep, 1.0 / std::sqrt(p));
    state.survival_prob_ *= p;
    return p;
}

double outcome_probability(const Statevector& state, int qubit, int outcome) {
    if (qubit < 0 || qubit >= state.n_qubits()) throw ShapeError("qubit out of range");
    return HQO_DISPATCH(probability_of, state.amplitudes(), qubit, outcome);
}

double norm_squared(const Statevector& state) { return HQO_DISPATCH(norm_squared, state.amplitudes()); }

double expectation_diagonal(const Statevector& state, const kernels::ValueFn& value) {
    return HQO_DISPATCH(expectation, state.amplitudes(), value);
}

std::map<std::string, std::uint64_t> sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw InputError("shots must be >= 1");
    const auto amps = state.amplitudes();
    std::vector<double> cumulative(amps.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        acc += std::norm(amps[z]);
        cumulative[z] = acc;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, acc);
    std::vector<std::uint64_t> counts(amps.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform(rng);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        ++counts[static_cast<std::size_t>(it - cumulative.begin())];
    }
    std::map<std::string, std::uint64_t> out;
    for (std::size_t z = 0; z < counts.size(); ++z) {
        if (counts[z] != 0) out.emplace(basis_string(z, state.n_qubits()), counts[z]);
    }
    return out;
}

std::vector<double> low_marginal(const Statevector& state, int n_bits) {
    if (n_bits < 0 || n_bits > state.n_qubits()) throw ShapeError("marginal width out of range");
    const std::uint64_t mask = (std::uint64_t{1} << n_bits) - 1;
    std::vector<double> out(std::size_t{1} << n_bits, 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t z = 0; z < amps.size(); ++z) out[z & mask] += std::norm(amps[z]);
    return out;
}

double mass_outside(const Statevector& state, std::uint64_t mask) {
    double m = 0.0;
    const auto amps = state.amplitudes();
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        if (z & mask) m += std::norm(amps[z]);
    }
    return m;
}

void require_clean(const Statevector& state, std::span<const int> qubits, double tol) {
    for (int q : qubits) {
        if (q < 0 || q >= state.n_qubits()) throw ShapeError("qubit out of range");
    }
    const double dirty = mass_outside(state, mask_of(qubits));
    if (dirty > tol) {
        std::ostringstream msg;
        msg << "ancilla qubits not in |0>: mass " << dirty << " on dirty branches";
        throw ContractError(msg.str());
    }
}

std::string basis_string(std::uint64_t index, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int b = 0; b < width; ++b) {
        if ((index >> b) & 1U) s[static_cast<std::size_t>(width - 1 - b)] = '1';
    }
    return s;
}

}  // namespace hqo
