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

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hqo/kernels.hpp"

namespace hqo {

using Complex = std::complex<double>;

enum class GateKind { H, X, RX, RZ, RZZ, CNOT, CPHASE, MCX, Oracle, Project };

const char* to_string(GateKind kind);

/// Classical function on basis indices standing in for a subcircuit. Exactly one
/// form is set: `phase` (diagonal: amp[z] *= e^{i phase(z)}), `forward`
/// (permutation: amp'[forward(z)] = amp[z], with `backward` its inverse), or
/// `keep` (post-selection onto the states where keep(z) holds).
struct BasisOracle {
    std::string label;
    kernels::PhaseFn phase;
    kernels::IndexMap forward;
    kernels::IndexMap backward;
    kernels::Predicate keep;

    bool is_diagonal() const { return static_cast<bool>(phase); }
    bool is_postselection() const { return static_cast<bool>(keep); }
};

/// One circuit element. Qubit conventions per kind:
///   CNOT   {control, target}
///   MCX    {controls..., target}
///   CPHASE {q0, q1, ...}: multiplies by e^{i angle} when every listed qubit is 1
///   RZ     diag(e^{-i angle/2}, e^{+i angle/2});  RZZ = exp(-i angle/2 Z(x)Z)
///   RX     exp(-i angle/2 X)
///   Oracle the qubits the oracle reads or writes (used for stats and validation)
///   Project {qubit}, post-selects `outcome`
/// Non-unitary elements (Project, post-selection oracles) renormalize the state
/// and multiply survival_prob by the kept probability.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    double angle = 0.0;
    int outcome = 0;
    std::shared_ptr<const BasisOracle> oracle;
    bool inverted = false;

    static Gate h(int q);
    static Gate x(int q);
    static Gate rx(int q, double theta);
    static Gate rz(int q, double theta);
    static Gate rzz(int a, int b, double theta);
    static Gate cnot(int control, int target);
    static Gate cphase(std::vector<int> qubits, double theta);
    static Gate mcx(std::vector<int> controls, int target);
    static Gate project(int q, int outcome);
    static Gate diagonal_oracle(std::string label, std::vector<int> qubits, kernels::PhaseFn phase);
    static Gate permutation_oracle(std::string label, std::vector<int> qubits, kernels::IndexMap forward,
                                   kernels::IndexMap backward);
    static Gate postselect_oracle(std::string label, std::vector<int> qubits, kernels::Predicate keep);

    bool is_unitary() const {
        return kind != GateKind::Project && !(kind == GateKind::Oracle && oracle && oracle->is_postselection());
    }

    /// Inverse element. Throws ContractError for projections and post-selections.
    Gate inverse() const;
};

/// Dense 2^n amplitude vector plus the probability retained across post-selections.
class Statevector {
   public:
    static constexpr int kMaxQubits = 26;

    /// |0...0>. Throws CapacityError unless 1 <= n_qubits <= kMaxQubits.
    explicit Statevector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    double survival_prob() const { return survival_prob_; }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    const Complex& operator[](std::uint64_t z) const { return amps_[z]; }

    /// Replaces the amplitudes and renormalizes them. Size must match dim().
    void assign(std::vector<Complex> amps);

   private:
    friend void apply_gate(Statevector& state, const Gate& gate);
    friend double project_qubit(Statevector& state, int qubit, int outcome);
    friend double postselect(Statevector& state, const kernels::Predicate& keep);

    int n_qubits_;
    std::vector<Complex> amps_;
    std::vector<Complex> scratch_;
    double survival_prob_ = 1.0;
};

inline constexpr double kEmptySubspaceThreshold = 1e-12;

Statevector new_state(int n_qubits);

/// Applies one element in place. Projections are routed to project_qubit.
/// Throws ShapeError for out-of-range or repeated qubit indices.
void apply_gate(Statevector& state, const Gate& gate);
void apply_gates(Statevector& state, std::span<const Gate> gates);

/// Post-selects `qubit` on `outcome`, renormalizes, and multiplies survival_prob
/// by the outcome probability, which is returned. Throws EmptySubspaceError when
/// that probability is <= kEmptySubspaceThreshold.
double project_qubit(Statevector& state, int qubit, int outcome);

/// Post-selects the basis states where keep(z) holds; same bookkeeping and
/// errors as project_qubit.
double postselect(Statevector& state, const kernels::Predicate& keep);

double outcome_probability(const Statevector& state, int qubit, int outcome);
double norm_squared(const Statevector& state);

/// Sum over z of |amp_z|^2 value(z).
double expectation_diagonal(const Statevector& state, const kernels::ValueFn& value);

/// Seeded multinomial sampling. Keys are basis strings, most significant qubit first.
std::map<std::string, std::uint64_t> sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed);

/// Probability distribution of the lowest `n_bits` qubits.
std::vector<double> low_marginal(const Statevector& state, int n_bits);

/// Probability mass on basis states where any bit of `mask` is set.
double mass_outside(const Statevector& state, std::uint64_t mask);

/// Throws ContractError when more than `tol` probability sits on branches where
/// any of `qubits` reads 1.
void require_clean(const Statevector& state, std::span<const int> qubits, double tol = 1e-10);

/// Renders `index` as `width` characters, bit width-1 first.
std::string basis_string(std::uint64_t index, int width);

}  // namespace hqo
