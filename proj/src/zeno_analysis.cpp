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

#include "hqo/zeno_analysis.hpp"

#include <cmath>

#include "hqo/error.hpp"

namespace hqo::zeno {

namespace {

constexpr double kTol = 1e-12;

void check_pair(const DenseHamiltonian& h, const Projector& p) {
    h.validate();
    p.validate();
    if (h.dim() != p.dim()) throw ContractError("Hamiltonian and projector dimensions differ");
}

void check_state(const Vector& psi0, int dim) {
    if (psi0.size() != dim) throw ShapeError("state dimension does not match the operator");
    if (std::abs(psi0.squaredNorm() - 1.0) > 1e-9) throw ContractError("initial state is not normalized");
}

// P psi0 = psi0 within tolerance; the initial state must lie in the measured subspace.
void check_in_subspace(const Projector& p, const Vector& psi0) {
    if ((p.matrix * psi0 - psi0).norm() > 1e-9) throw ContractError("initial state is not inside the projector's range");
}

Vector measured_evolution(const DenseHamiltonian& h, const Projector& p, const Vector& psi0, double t, int n) {
    if (n < 1) throw InputError("need at least one measurement");
    const Matrix step = p.matrix * evolution(h, t / n);
    Vector psi = psi0;
    for (int k = 0; k < n; ++k) psi = step * psi;
    return psi;
}

}  // namespace

void DenseHamiltonian::validate() const {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) throw ContractError("Hamiltonian must be square");
    if (matrix.rows() > kMaxDim) throw CapacityError("dense model limited to dimension 256");
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kTol) throw ContractError("Hamiltonian is not Hermitian");
}

DenseHamiltonian DenseHamiltonian::pauli_x() {
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    return {x};
}

void Projector::validate() const {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) throw ContractError("projector must be square");
    if (matrix.rows() > kMaxDim) throw CapacityError("dense model limited to dimension 256");
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > kTol) throw ContractError("projector is not Hermitian");
    if ((matrix * matrix - matrix).cwiseAbs().maxCoeff() > kTol) throw ContractError("projector is not idempotent");
}

Projector Projector::onto(std::span<const int> basis_states, int dim) {
    Matrix m = Matrix::Zero(dim, dim);
    for (int s : basis_states) {
        if (s < 0 || s >= dim) throw ShapeError("basis state out of range");
        m(s, s) = 1.0;
    }
    return {m};
}

Matrix evolution(const DenseHamiltonian& h, double t) {
    h.validate();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h.matrix);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    Vector phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) phases[i] = std::polar(1.0, -lambda[i] * t);
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

double survival_analytic(const DenseHamiltonian& h, const Vector& psi0, double t, int n) {
    h.validate();
    check_state(psi0, h.dim());
    if (n < 1) throw InputError("need at least one measurement");
    const Vector hpsi = h.matrix * psi0;
    const double mean = psi0.dot(hpsi).real();
    const double second = hpsi.squaredNorm();
    const double theta = second - mean * mean;
    const double eps = t / n;
    return 1.0 - t * eps * theta * theta;
}

double survival_empirical(const DenseHamiltonian& h, const Projector& p, const Vector& psi0, double t, int n) {
    check_pair(h, p);
    check_state(psi0, h.dim());
    check_in_subspace(p, psi0);
    return std::min(1.0, measured_evolution(h, p, psi0, t, n).squaredNorm());
}

DenseHamiltonian zeno_hamiltonian(const DenseHamiltonian& h, const Projector& p) {
    check_pair(h, p);
    Matrix hz = p.matrix * h.matrix * p.matrix;
    hz = 0.5 * (hz + hz.adjoint()).eval();  // strip rounding asymmetry
    return {hz};
}

double zeno_limit_error(const DenseHamiltonian& h, const Projector& p, const Vector& psi0, double t, int n) {
    check_pair(h, p);
    check_state(psi0, h.dim());
    check_in_subspace(p, psi0);
    const Vector limit = p.matrix * evolution(zeno_hamiltonian(h, p), t) * psi0;
    return (measured_evolution(h, p, psi0, t, n) - limit).norm();
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw InputError("need at least two matching points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw InputError("log-log fit needs positive values");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace hqo::zeno
