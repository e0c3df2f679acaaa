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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hqo/optimizer.hpp"

namespace hqo {

inline constexpr int kMaxSweepConstraints = 8;

/// All 3^n assignments, lexicographic with QAOA < DEPHASE < ZENO and constraint 0
/// most significant. Throws CapacityError above kMaxSweepConstraints.
std::vector<RepresentationAssignment> enumerate_assignments(int n_constraints);

struct SweepConfig {
    OptimizerConfig optimizer = [] {
        OptimizerConfig c;
        c.max_iters = 40;
        return c;
    }();
    /// Row i optimizes with seed base_seed + i.
    std::uint64_t base_seed = 0;
    /// 0: exact metrics. Otherwise p_feasible, p_optimal and expected_cost of the
    /// final state are estimated from this many samples (survival stays exact).
    std::uint64_t shots = 0;
    /// 0 leaves the OpenMP default.
    int threads = 0;
};

struct SweepRow {
    std::size_t index = 0;
    RepresentationAssignment assignment;
    std::optional<CircuitStats> stats;
    EvalResult metrics;
    LayerParams best_params;
    double wall_time_s = 0.0;
    /// Empty unless the row failed (e.g. a projection emptied the state).
    std::string error;
};

/// Optimizes one assignment and gathers its circuit statistics.
SweepRow run_sweep_row(const ConstrainedBinaryProblem& problem, std::shared_ptr<const BruteForceResult> truth,
                       const Multipliers& mult, const RepresentationAssignment& assignment, std::size_t index,
                       const SweepConfig& config, BlockOrdering ordering = BlockOrdering::Natural);

/// One row per assignment in enumeration order. Rows run in parallel and fail
/// independently. `rows`, when non-empty, restricts the sweep to those indices.
std::vector<SweepRow> run_family_sweep(const ConstrainedBinaryProblem& problem, const Multipliers& mult,
                                       const SweepConfig& config, BlockOrdering ordering = BlockOrdering::Natural,
                                       std::span<const std::size_t> rows = {});

void write_family_csv(std::span<const SweepRow> rows, std::ostream& out);

struct LagrangeRow {
    double lambda = 0.0;
    EvalResult metrics;
    LayerParams best_params;
};

/// Same multiplier on every constraint. Throws InputError unless lambdas are
/// positive and strictly ascending.
std::vector<LagrangeRow> lagrange_sweep(const ConstrainedBinaryProblem& problem,
                                        const RepresentationAssignment& assignment, std::span<const double> lambdas,
                                        double alpha, const OptimizerConfig& config);

void write_lagrange_csv(std::span<const LagrangeRow> rows, std::ostream& out);

struct StateHistogram {
    int n_decision = 0;
    std::vector<double> probability;  // indexed by packed decision state
    int support_size = 0;             // states above kSupportThreshold
};

inline constexpr double kSupportThreshold = 1e-12;

/// Final-state marginal over the decision qubits.
StateHistogram state_visit_histogram(const ConstrainedBinaryProblem& problem,
                                     const RepresentationAssignment& assignment, const Multipliers& mult,
                                     const LayerParams& params, BlockOrdering ordering = BlockOrdering::Natural);

/// state,probability,feasible
void write_histogram_csv(const StateHistogram& hist, const ConstrainedBinaryProblem& problem, std::ostream& out);

struct OrderingRow {
    BlockOrdering ordering = BlockOrdering::Natural;
    EvalResult metrics;
    LayerParams best_params;
};

/// Optimizes the same assignment under each ordering with an identical config.
/// Throws InputError unless the assignment has at least one DEPHASE and one ZENO.
std::vector<OrderingRow> ordering_study(const ConstrainedBinaryProblem& problem,
                                        const RepresentationAssignment& assignment, const Multipliers& mult,
                                        const OptimizerConfig& config,
                                        std::span<const BlockOrdering> orderings = {});

/// max - min of p_feasible across rows.
double p_feasible_spread(std::span<const OrderingRow> rows);

void write_ordering_csv(std::span<const OrderingRow> rows, std::ostream& out);

/// Metrics estimated from `shots` samples of the evaluator's final state.
EvalResult sampled_metrics(const Evaluator& evaluator, const Statevector& state, std::uint64_t shots,
                           std::uint64_t seed);

}  // namespace hqo
