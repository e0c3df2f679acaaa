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

#include "hqo/kernels.hpp"

#include <cmath>

namespace hqo::kernels::serial {

void apply_matrix(std::span<Complex> amps, unsigned target, const Mat2& m, std::uint64_t ctrl_mask) {
    const std::uint64_t step = std::uint64_t{1} << target;
    const std::uint64_t size = amps.size();
    for (std::uint64_t i = 0; i < size; i += 2 * step) {
        for (std::uint64_t j = 0; j < step; ++j) {
            const std::uint64_t idx0 = i + j;
            if ((idx0 & ctrl_mask) != ctrl_mask) continue;
            const std::uint64_t idx1 = idx0 + step;
            const Complex a0 = amps[idx0];
            const Complex a1 = amps[idx1];
            amps[idx0] = m.m00 * a0 + m.m01 * a1;
            amps[idx1] = m.m10 * a0 + m.m11 * a1;
        }
    }
}

void apply_x(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask) {
    const std::uint64_t step = std::uint64_t{1} << target;
    const std::uint64_t size = amps.size();
    for (std::uint64_t i = 0; i < size; i += 2 * step) {
        for (std::uint64_t j = 0; j < step; ++j) {
            const std::uint64_t idx0 = i + j;
            if ((idx0 & ctrl_mask) != ctrl_mask) continue;
            std::swap(amps[idx0], amps[idx0 + step]);
        }
    }
}

void apply_phase(std::span<Complex> amps, std::uint64_t mask, Complex phase) {
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        if ((z & mask) == mask) amps[z] *= phase;
    }
}

void apply_rz(std::span<Complex> amps, unsigned target, double theta) {
    const Complex p0 = std::polar(1.0, -theta / 2);
    const Complex p1 = std::polar(1.0, theta / 2);
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        amps[z] *= ((z >> target) & 1U) ? p1 : p0;
    }
}

void apply_rzz(std::span<Complex> amps, unsigned a, unsigned b, double theta) {
    const Complex same = std::polar(1.0, -theta / 2);
    const Complex diff = std::polar(1.0, theta / 2);
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        const bool odd = (((z >> a) ^ (z >> b)) & 1U) != 0;
        amps[z] *= odd ? diff : same;
    }
}

void apply_diagonal(std::span<Complex> amps, const PhaseFn& phase) {
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        amps[z] *= std::polar(1.0, phase(z));
    }
}

void apply_permutation(std::span<Complex> amps, std::span<Complex> scratch, const IndexMap& map) {
    for (std::uint64_t z = 0; z < amps.size(); ++z) scratch[map(z)] = amps[z];
    for (std::uint64_t z = 0; z < amps.size(); ++z) amps[z] = scratch[z];
}

double probability_of(std::span<const Complex> amps, unsigned target, int outcome) {
    double p = 0.0;
    const std::uint64_t want = outcome ? 1U : 0U;
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        if (((z >> target) & 1U) == want) p += std::norm(amps[z]);
    }
    return p;
}

void project(std::span<Complex> amps, unsigned target, int outcome, double scale) {
    const std::uint64_t want = outcome ? 1U : 0U;
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        if (((z >> target) & 1U) == want) {
            amps[z] *= scale;
        } else {
            amps[z] = 0.0;
        }
    }
}

double mass_where(std::span<const Complex> amps, const Predicate& keep) {
    double p = 0.0;
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        if (keep(z)) p += std::norm(amps[z]);
    }
    return p;
}

void keep_where(std::span<Complex> amps, const Predicate& keep, double scale) {
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        if (keep(z)) {
            amps[z] *= scale;
        } else {
            amps[z] = 0.0;
        }
    }
}

double norm_squared(std::span<const Complex> amps) {
    double s = 0.0;
    for (const Complex& a : amps) s += std::norm(a);
    return s;
}

double expectation(std::span<const Complex> amps, const ValueFn& value) {
    double s = 0.0;
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        const double p = std::norm(amps[z]);
        if (p != 0.0) s += p * value(z);
    }
    return s;
}

}  // namespace hqo::kernels::serial
