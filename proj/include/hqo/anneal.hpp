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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hqo/problem.hpp"

namespace hqo {

/// Geometric cooling from t_start to t_end over `steps` visits.
struct AnnealSchedule {
    double t_start = 10.0;
    double t_end = 0.05;
    int steps = 5000;
    std::uint64_t seed = 0;
    /// Bits flipped together in one proposal.
    int flips_per_step = 1;

    void validate() const;
    double temperature(int step) const;
};

struct VisitRecord {
    int step = 0;
    std::uint64_t state = 0;
    double cost = 0.0;
    bool accepted = false;
};

struct AnnealResult {
    int n_bits = 0;
    int n_decision = 0;
    std::uint64_t best_state = 0;
    double best_cost = 0.0;
    /// Exactly one visited state per step; step 0 is the random start.
    std::vector<VisitRecord> trace;
};

/// Metropolis walk over the QUBO with every constraint penalized (slack bits included).
AnnealResult anneal(const ConstrainedBinaryProblem& problem, const Multipliers& mult, const AnnealSchedule& schedule);
AnnealResult anneal(const Qubo& qubo, const AnnealSchedule& schedule);

/// step,state,cost,accepted with state as a bit string, most significant bit first.
void write_anneal_csv(const AnnealResult& result, std::ostream& out);

}  // namespace hqo
