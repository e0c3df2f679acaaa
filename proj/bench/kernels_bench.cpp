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

// Serial reference kernels against their OpenMP versions, by state size.
// Arg = number of qubits.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hqo/kernels.hpp"
#include "hqo/optimizer.hpp"

namespace {

using namespace hqo;
using kernels::Complex;

std::vector<Complex> random_amps(int n_qubits) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    std::vector<Complex> a(std::size_t{1} << n_qubits);
    for (auto& z : a) z = {g(rng), g(rng)};
    return a;
}

const kernels::Mat2 kHadamard{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};

template <bool Parallel>
void BM_Hadamard(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    auto a = random_amps(n);
    for (auto _ : st) {
        for (int q = 0; q < n; ++q) {
            if constexpr (Parallel) {
                kernels::parallel::apply_matrix(a, q, kHadamard, 0);
            } else {
                kernels::serial::apply_matrix(a, q, kHadamard, 0);
            }
        }
        benchmark::DoNotOptimize(a.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(a.size()) * n);
}

template <bool Parallel>
void BM_Rzz(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    auto a = random_amps(n);
    for (auto _ : st) {
        for (int q = 0; q + 1 < n; ++q) {
            if constexpr (Parallel) {
                kernels::parallel::apply_rzz(a, q, q + 1, 0.37);
            } else {
                kernels::serial::apply_rzz(a, q, q + 1, 0.37);
            }
        }
        benchmark::DoNotOptimize(a.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(a.size()) * (n - 1));
}

template <bool Parallel>
void BM_Diagonal(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    auto a = random_amps(n);
    const kernels::PhaseFn phase = [](std::uint64_t z) { return 0.01 * static_cast<double>(z % 97); };
    for (auto _ : st) {
        if constexpr (Parallel) {
            kernels::parallel::apply_diagonal(a, phase);
        } else {
            kernels::serial::apply_diagonal(a, phase);
        }
        benchmark::DoNotOptimize(a.data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(a.size()));
}

template <bool Parallel>
void BM_Norm(benchmark::State& st) {
    const auto a = random_amps(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        if constexpr (Parallel) {
            benchmark::DoNotOptimize(kernels::parallel::norm_squared(a));
        } else {
            benchmark::DoNotOptimize(kernels::serial::norm_squared(a));
        }
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(a.size()));
}

// End to end: one P=1 evaluation of the all-QAOA cargo circuit (13 qubits).
void BM_CargoEvaluation(benchmark::State& st) {
    kernels::set_default_backend(st.range(0) ? kernels::Backend::Parallel : kernels::Backend::Serial);
    const std::vector<std::int64_t> w{1, 2, 3};
    const auto p = cargo_instance(w, 2, 3);
    const Evaluator ev(p, RepresentationAssignment(6, Representation::Qaoa), Multipliers::uniform(p, 13.0));
    const auto params = LayerParams::uniform(1, 0.004, 0.9);
    for (auto _ : st) benchmark::DoNotOptimize(ev(params));
    kernels::set_default_backend(kernels::Backend::Parallel);
}

}  // namespace

#define HQO_PAIR(fn)                                                         \
    BENCHMARK(fn<false>)->Name(#fn "/serial")->DenseRange(12, 22, 5);        \
    BENCHMARK(fn<true>)->Name(#fn "/parallel")->DenseRange(12, 22, 5);

HQO_PAIR(BM_Hadamard)
HQO_PAIR(BM_Rzz)
HQO_PAIR(BM_Diagonal)
HQO_PAIR(BM_Norm)
BENCHMARK(BM_CargoEvaluation)->ArgName("parallel")->Arg(0)->Arg(1);

BENCHMARK_MAIN();
