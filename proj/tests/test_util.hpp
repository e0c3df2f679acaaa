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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hqo/statevector.hpp"

namespace hqo::test_util {

inline std::vector<Complex> random_amplitudes(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n_qubits);
    double norm = 0.0;
    for (auto& x : a) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto& x : a) x /= std::sqrt(norm);
    return a;
}

inline Statevector random_state(int n_qubits, std::uint64_t seed) {
    Statevector s(n_qubits);
    s.assign(random_amplitudes(n_qubits, seed));
    return s;
}

inline double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

/// Computational basis state |index>.
inline Statevector basis_state(int n_qubits, std::uint64_t index) {
    Statevector s(n_qubits);
    std::vector<Complex> a(std::size_t{1} << n_qubits);
    a[index] = 1.0;
    s.assign(std::move(a));
    return s;
}

inline bool bit(std::uint64_t z, int q) { return (z >> q) & 1U; }

}  // namespace hqo::test_util
