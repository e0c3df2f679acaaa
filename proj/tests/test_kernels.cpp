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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hqo/kernels.hpp"
#include "test_util.hpp"

namespace k = hqo::kernels;
using hqo::Complex;
using hqo::test_util::max_diff;
using hqo::test_util::random_amplitudes;

namespace {

// Big enough that the parallel kernels take their threaded path.
constexpr int kQubits = 15;

k::Mat2 random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    const double t = u(rng) / 2, a = u(rng), b = u(rng), c = u(rng);
    const Complex i(0, 1);
    return {std::exp(i * a) * std::cos(t), -std::exp(i * b) * std::sin(t), std::exp(i * c) * std::sin(t),
            std::exp(i * (b + c - a)) * std::cos(t)};
}

}  // namespace

TEST(Kernels, MatrixAgreesAcrossBackends) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_amplitudes(kQubits, trial);
        auto b = a;
        const unsigned target = rng() % kQubits;
        std::uint64_t ctrl = rng() & ((1ULL << kQubits) - 1) & ~(1ULL << target);
        if (trial % 3 == 0) ctrl = 0;
        ctrl &= rng();  // sparse controls
        const auto m = random_unitary(rng);
        k::serial::apply_matrix(a, target, m, ctrl);
        k::parallel::apply_matrix(b, target, m, ctrl);
        EXPECT_LT(max_diff(a, b), 1e-12);
        EXPECT_NEAR(k::serial::norm_squared(a), 1.0, 1e-12);
    }
}

TEST(Kernels, MatrixMatchesDefinition) {
    std::mt19937_64 rng(3);
    const int n = 5;
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_amplitudes(n, 100 + trial);
        const unsigned t = rng() % n;
        const std::uint64_t ctrl = rng() & 31 & ~(1ULL << t);
        const auto m = random_unitary(rng);
        std::vector<Complex> expect(a.size());
        for (std::uint64_t z = 0; z < a.size(); ++z) {
            if ((z & ctrl) != ctrl) {
                expect[z] = a[z];
                continue;
            }
            const std::uint64_t z0 = z & ~(1ULL << t), z1 = z | (1ULL << t);
            expect[z] = ((z >> t) & 1) ? m.m10 * a[z0] + m.m11 * a[z1] : m.m00 * a[z0] + m.m01 * a[z1];
        }
        k::parallel::apply_matrix(a, t, m, ctrl);
        EXPECT_LT(max_diff(a, expect), 1e-12);
    }
}

TEST(Kernels, DiagonalFamilyAgreesAcrossBackends) {
    auto a = random_amplitudes(kQubits, 11);
    auto b = a;
    k::serial::apply_x(a, 3, 1ULL << 9);
    k::parallel::apply_x(b, 3, 1ULL << 9);
    k::serial::apply_phase(a, (1ULL << 2) | (1ULL << 14), std::polar(1.0, 0.7));
    k::parallel::apply_phase(b, (1ULL << 2) | (1ULL << 14), std::polar(1.0, 0.7));
    k::serial::apply_rz(a, 5, 1.3);
    k::parallel::apply_rz(b, 5, 1.3);
    k::serial::apply_rzz(a, 0, 12, -0.4);
    k::parallel::apply_rzz(b, 0, 12, -0.4);
    auto phase = [](std::uint64_t z) { return 0.01 * static_cast<double>(z % 97); };
    k::serial::apply_diagonal(a, phase);
    k::parallel::apply_diagonal(b, phase);
    EXPECT_LT(max_diff(a, b), 1e-12);
}

TEST(Kernels, PermutationAndProjectionAgree) {
    auto a = random_amplitudes(kQubits, 12);
    auto b = a;
    std::vector<Complex> scratch(a.size());
    const std::uint64_t mask = (1ULL << kQubits) - 1;
    auto map = [mask](std::uint64_t z) { return (z * 5 + 3) & mask; };  // odd multiplier: bijection
    k::serial::apply_permutation(a, scratch, map);
    k::parallel::apply_permutation(b, scratch, map);
    EXPECT_LT(max_diff(a, b), 1e-12);
    auto a0 = random_amplitudes(kQubits, 12);
    EXPECT_EQ(a[map(17)], a0[17]);

    EXPECT_NEAR(k::serial::probability_of(a, 4, 1), k::parallel::probability_of(b, 4, 1), 1e-12);
    const double p = k::serial::probability_of(a, 4, 1);
    k::serial::project(a, 4, 1, 1 / std::sqrt(p));
    k::parallel::project(b, 4, 1, 1 / std::sqrt(p));
    EXPECT_LT(max_diff(a, b), 1e-12);
    EXPECT_NEAR(k::parallel::norm_squared(b), 1.0, 1e-12);
    EXPECT_NEAR(k::serial::probability_of(a, 4, 0), 0.0, 1e-15);

    auto value = [](std::uint64_t z) { return static_cast<double>(__builtin_popcountll(z)); };
    EXPECT_NEAR(k::serial::expectation(a, value), k::parallel::expectation(b, value), 1e-10);
}

TEST(Kernels, RzMatchesDefinition) {
    auto a = random_amplitudes(4, 5);
    auto b = a;
    k::serial::apply_rz(a, 2, 0.9);
    for (std::uint64_t z = 0; z < b.size(); ++z) b[z] *= std::polar(1.0, ((z >> 2) & 1) ? 0.45 : -0.45);
    EXPECT_LT(max_diff(a, b), 1e-14);
    a = random_amplitudes(4, 6);
    b = a;
    k::parallel::apply_rzz(a, 1, 3, 0.9);
    for (std::uint64_t z = 0; z < b.size(); ++z) {
        const bool same = ((z >> 1) & 1) == ((z >> 3) & 1);
        b[z] *= std::polar(1.0, same ? -0.45 : 0.45);
    }
    EXPECT_LT(max_diff(a, b), 1e-14);
}
