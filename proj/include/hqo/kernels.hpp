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

// Amplitude-level kernels. Two implementations with identical signatures:
//   serial::   straightforward stride loops, the reference used by tests
//   parallel:: flattened index loops parallelized with OpenMP
// Qubit q corresponds to bit q of the basis index (q = 0 is least significant).

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

namespace hqo::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 matrix.
struct Mat2 {
    Complex m00, m01, m10, m11;
};

using PhaseFn = std::function<double(std::uint64_t)>;
using IndexMap = std::function<std::uint64_t(std::uint64_t)>;
using ValueFn = std::function<double(std::uint64_t)>;
using Predicate = std::function<bool(std::uint64_t)>;

enum class Backend { Serial, Parallel };

/// Backend used by the Statevector front end. Defaults to Parallel.
Backend default_backend();
void set_default_backend(Backend backend);

/// The parallel kernels hand states smaller than this to the serial ones.
inline constexpr std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;

#define HQO_KERNEL_DECLS                                                                         \
    /* m applied to `target` on pairs whose bits in ctrl_mask are all set */                     \
    void apply_matrix(std::span<Complex> amps, unsigned target, const Mat2& m,                   \
                      std::uint64_t ctrl_mask);                                                  \
    void apply_x(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask);             \
    /* amp[z] *= phase where every bit of mask is set in z */                                    \
    void apply_phase(std::span<Complex> amps, std::uint64_t mask, Complex phase);                \
    void apply_rz(std::span<Complex> amps, unsigned target, double theta);                       \
    void apply_rzz(std::span<Complex> amps, unsigned a, unsigned b, double theta);               \
    void apply_diagonal(std::span<Complex> amps, const PhaseFn& phase);                          \
    /* out[map(z)] = amps[z]; map must be a bijection on [0, amps.size()) */                     \
    void apply_permutation(std::span<Complex> amps, std::span<Complex> scratch,                  \
                           const IndexMap& map);                                                 \
    double probability_of(std::span<const Complex> amps, unsigned target, int outcome);          \
    /* zeroes the branch != outcome and multiplies the kept branch by scale */                   \
    void project(std::span<Complex> amps, unsigned target, int outcome, double scale);           \
    /* probability on basis states where keep(z) holds */                                       \
    double mass_where(std::span<const Complex> amps, const Predicate& keep);                     \
    /* zeroes states where keep(z) fails and multiplies the rest by scale */                     \
    void keep_where(std::span<Complex> amps, const Predicate& keep, double scale);               \
    double norm_squared(std::span<const Complex> amps);                                          \
    double expectation(std::span<const Complex> amps, const ValueFn& value);

namespace serial {
HQO_KERNEL_DECLS
}  // namespace serial

namespace parallel {
HQO_KERNEL_DECLS
}  // namespace parallel

#undef HQO_KERNEL_DECLS

}  // namespace hqo::kernels
