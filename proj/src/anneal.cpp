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

#include "hqo/anneal.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <random>

#include "hqo/error.hpp"
#include "hqo/statevector.hpp"

namespace hqo {

void AnnealSchedule::validate() const {
    if (!(t_end > 0.0) || !(t_start >= t_end)) throw InputError("need t_start >= t_end > 0");
    if (steps < 1) throw InputError("need at least one step");
    if (flips_per_step < 1) throw InputError("need at least one flip per step");
}

double AnnealSchedule::temperature(int step) const {
    if (steps <= 1) return t_start;
    return t_start * std::pow(t_end / t_start, static_cast<double>(step) / (steps - 1));
}

AnnealResult anneal(const ConstrainedBinaryProblem& problem, const Multipliers& mult, const AnnealSchedule& schedule) {
    return anneal(compile_qubo(problem, RepresentationAssignment(problem.constraints.size(), Representation::Qaoa), mult),
                  schedule);
}

AnnealResult anneal(const Qubo& qubo, const AnnealSchedule& schedule) {
    schedule.validate();
    if (schedule.flips_per_step > qubo.n_bits) throw InputError("more flips per step than bits");
    std::mt19937_64 rng(schedule.seed);
    std::uniform_int_distribution<int> pick(0, qubo.n_bits - 1);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    AnnealResult r;
    r.n_bits = qubo.n_bits;
    r.n_decision = qubo.n_decision;
    r.trace.reserve(static_cast<std::size_t>(schedule.steps));
    const std::uint64_t mask = qubo.n_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << qubo.n_bits) - 1;
    std::uint64_t state = rng() & mask;
    double cost = qubo.value(state);
    r.best_state = state;
    r.best_cost = cost;
    r.trace.push_back({0, state, cost, true});

    for (int step = 1; step < schedule.steps; ++step) {
        std::uint64_t flip = 0;
        while (std::popcount(flip) < schedule.flips_per_step) flip |= std::uint64_t{1} << pick(rng);
        const std::uint64_t candidate = state ^ flip;
        const double c = qubo.value(candidate);
        const double t = schedule.temperature(step);
        const bool accept = c <= cost || u01(rng) < std::exp(-(c - cost) / t);
        if (accept) {
            state = candidate;
            cost = c;
            if (cost < r.best_cost) {
                r.best_cost = cost;
                r.best_state = state;
            }
        }
        r.trace.push_back({step, state, cost, accept});
    }
    return r;
}

void write_anneal_csv(const AnnealResult& result, std::ostream& out) {
    out << "step,state,cost,accepted\n";
    for (const auto& v : result.trace) {
        out << v.step << ',' << basis_string(v.state, result.n_bits) << ',' << v.cost << ',' << (v.accepted ? 1 : 0)
            << '\n';
    }
}

}  // namespace hqo
