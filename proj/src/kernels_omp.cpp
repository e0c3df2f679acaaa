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

#include <cmath>
#include <cstdint>

#include "hqo/kernels.hpp"

namespace hqo::kernels {

namespace {
Backend g_backend = Backend::Parallel;

// Index of the idx-th pair's |0> member: insert a zero bit at position `target`.
inline std::uint64_t insert_zero(std::uint64_t idx, unsigned target) {
    const std::uint64_t low = idx & ((std::uint64_t{1} << target) - 1);
    return ((idx >> target) << (target + 1)) | low;
}
}  // namespace

Backend default_backend() { return g_backend; }
void set_default_backend(Backend backend) { g_backend = backend; }

namespace parallel {

void apply_matrix(std::span<Complex> amps, unsigned target, const Mat2& m, std::uint64_t ctrl_mask) {
    if (amps.size() < kParallelThreshold) return serial::apply_matrix(amps, target, m, ctrl_mask);
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t bit = std::uint64_t{1} << target;
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t idx0 = insert_zero(static_cast<std::uint64_t>(k), target);
        if ((idx0 & ctrl_mask) != ctrl_mask) continue;
        const std::uint64_t idx1 = idx0 | bit;
        const Complex a0 = data[idx0];
        const Complex a1 = data[idx1];
        data[idx0] = m.m00 * a0 + m.m01 * a1;
        data[idx1] = m.m10 * a0 + m.m11 * a1;
    }
}

void apply_x(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask) {
    if (amps.size() < kParallelThreshold) return serial::apply_x(amps, target, ctrl_mask);
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t bit = std::uint64_t{1} << target;
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t idx0 = insert_zero(static_cast<std::uint64_t>(k), target);
        if ((idx0 & ctrl_mask) != ctrl_mask) continue;
        std::swap(data[idx0], data[idx0 | bit]);
    }
}

void apply_phase(std::span<Complex> amps, std::uint64_t mask, Complex phase) {
    if (amps.size() < kParallelThreshold) return serial::apply_phase(amps, mask, phase);
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t z = 0; z < size; ++z) {
        if ((static_cast<std::uint64_t>(z) & mask) == mask) data[z] *= phase;
    }
}

void apply_rz(std::span<Complex> amps, unsigned target, double theta) {
    if (amps.size() < kParallelThreshold) return serial::apply_rz(amps, target, theta);
    const Complex p[2] = {std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2)};
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t z = 0; z < size; ++z) {
        data[z] *= p[(static_cast<std::uint64_t>(z) >> target) & 1U];
    }
}

void apply_rzz(std::span<Complex> amps, unsigned a, unsigned b, double theta) {
    if (amps.size() < kParallelThreshold) return serial::apply_rzz(amps, a, b, theta);
    const Complex p[2] = {std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2)};
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t z = 0; z < size; ++z) {
        const auto u = static_cast<std::uint64_t>(z);
        data[z] *= p[((u >> a) ^ (u >> b)) & 1U];
    }
}

void apply_diagonal(std::span<Complex> amps, const PhaseFn& phase) {
    if (amps.size() < kParallelThreshold) return serial::apply_diagonal(amps, phase);
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t z = 0; z < size; ++z) {
        data[z] *= std::polar(1.0, phase(static_cast<std::uint64_t>(z)));
    }
}

void apply_permutation(std::span<Complex> amps, std::span<Complex> scratch, const IndexMap& map) {
    if (amps.size() < kParallelThreshold) return serial::apply_permutation(amps, scratch, map);
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    Complex* data = amps.data();
    Complex* out = scratch.data();
#pragma omp parallel
    {
#pragma omp for schedule(static)
        for (std::int64_t z = 0; z < size; ++z) out[map(static_cast<std::uint64_t>(z))] = data[z];
#pragma omp for schedule(static)
        for (std::int64_t z = 0; z < size; ++z) data[z] = out[z];
    }
}

double probability_of(std::span<const Complex> amps, unsigned target, int outcome) {
    if (amps.size() < kParallelThreshold) return serial::probability_of(amps, target, outcome);
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t offset = outcome ? (std::uint64_t{1} << target) : 0;
    const Complex* data = amps.data();
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p)
    for (std::int64_t k = 0; k < half; ++k) {
        p += std::norm(data[insert_zero(static_cast<std::uint64_t>(k), target) | offset]);
    }
    return p;
}

void project(std::span<Complex> amps, unsigned target, int outcome, double scale) {
    if (amps.size() < kParallelThreshold) return serial::project(amps, target, outcome, scale);
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t bit = std::uint64_t{1} << target;
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < half; ++k) {
        const std::uint64_t idx0 = insert_zero(static_cast<std::uint64_t>(k), target);
        const std::uint64_t keep = outcome ? (idx0 | bit) : idx0;
        const std::uint64_t drop = outcome ? idx0 : (idx0 | bit);
        data[keep] *= scale;
        data[drop] = 0.0;
    }
}

double mass_where(std::span<const Complex> amps, const Predicate& keep) {
    if (amps.size() < kParallelThreshold) return serial::mass_where(amps, keep);
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    const Complex* data = amps.data();
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p)
    for (std::int64_t z = 0; z < size; ++z) {
        if (keep(static_cast<std::uint64_t>(z))) p += std::norm(data[z]);
    }
    return p;
}

void keep_where(std::span<Complex> amps, const Predicate& keep, double scale) {
    if (amps.size() < kParallelThreshold) return serial::keep_where(amps, keep, scale);
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    Complex* data = amps.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t z = 0; z < size; ++z) {
        data[z] = keep(static_cast<std::uint64_t>(z)) ? data[z] * scale : Complex(0.0);
    }
}

double norm_squared(std::span<const Complex> amps) {
    if (amps.size() < kParallelThreshold) return serial::norm_squared(amps);
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    const Complex* data = amps.data();
    double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
    for (std::int64_t z = 0; z < size; ++z) s += std::norm(data[z]);
    return s;
}

double expectation(std::span<const Complex> amps, const ValueFn& value) {
    if (amps.size() < kParallelThreshold) return serial::expectation(amps, value);
    const std::int64_t size = static_cast<std::int64_t>(amps.size());
    const Complex* data = amps.data();
    double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
    for (std::int64_t z = 0; z < size; ++z) {
        const double p = std::norm(data[z]);
        if (p != 0.0) s += p * value(static_cast<std::uint64_t>(z));
    }
    return s;
}

}  // namespace parallel
}  // namespace hqo::kernels
