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

// Dense small-system model of repeated projective measurement (hbar = 1).

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hqo::zeno {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxDim = 256;

struct DenseHamiltonian {
    Matrix matrix;

    int dim() const { return static_cast<int>(matrix.rows()); }
    /// Throws ContractError unless square, Hermitian within 1e-12 and dim <= kMaxDim.
    void validate() const;

    static DenseHamiltonian pauli_x();
};

struct Projector {
    Matrix matrix;

    int dim() const { return static_cast<int>(matrix.rows()); }
    /// Throws ContractError unless P^2 = P and P^dagger = P within 1e-12.
    void validate() const;

    /// Diagonal projector onto the listed basis states.
    static Projector onto(std::span<const int> basis_states, int dim);
};

/// exp(-i H t) through the eigendecomposition of H.
Matrix evolution(const DenseHamiltonian& h, double t);

/// Second-order short-time expansion 1 - t (t / N) Theta^2 with
/// Theta = <H^2> - <H>^2, as written (unclamped; can go negative for large t).
double survival_analytic(const DenseHamiltonian& h, const Vector& psi0, double t, int n);

/// || [P exp(-i H t / N)]^N psi0 ||^2. Requires P psi0 = psi0.
double survival_empirical(const DenseHamiltonian& h, const Projector& p, const Vector& psi0, double t, int n);

/// P H P, the generator of the measured dynamics inside the subspace.
DenseHamiltonian zeno_hamiltonian(const DenseHamiltonian& h, const Projector& p);

/// || [P exp(-i H t / N)]^N psi0 - P exp(-i P H P t) psi0 ||
double zeno_limit_error(const DenseHamiltonian& h, const Projector& p, const Vector& psi0, double t, int n);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace hqo::zeno
