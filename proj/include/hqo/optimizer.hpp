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

#include <iosfwd>
#include <memory>
#include <vector>

#include "hqo/hybrid.hpp"

namespace hqo {

struct EvalResult {
    double expected_cost = 0.0;
    double p_feasible = 0.0;
    double p_optimal = 0.0;
    double survival_prob = 1.0;
};

/// Everything needed to score parameter points for one (problem, assignment)
/// pair, compiled once: QUBO cost table, layout, and the brute-force feasible
/// and optimal sets, and the prepared initial state. Scoring is exact (no shot noise) and const, so one
/// evaluator can be shared across threads.
class Evaluator {
   public:
    Evaluator(const ConstrainedBinaryProblem& problem, RepresentationAssignment assignment, Multipliers mult,
              BlockOrdering ordering = BlockOrdering::Natural, GateMode mode = GateMode::Oracle);

    /// Reuses an existing brute-force result for the same problem.
    Evaluator(const ConstrainedBinaryProblem& problem, RepresentationAssignment assignment, Multipliers mult,
              BlockOrdering ordering, GateMode mode, std::shared_ptr<const BruteForceResult> truth);

    EvalResult operator()(const LayerParams& params) const;
    /// Metrics of an already simulated final state.
    EvalResult score(const Statevector& state) const;

    HybridCircuit circuit(const LayerParams& params) const;
    Statevector final_state(const LayerParams& params) const;

    const ConstrainedBinaryProblem& problem() const { return problem_; }
    const RepresentationAssignment& assignment() const { return assignment_; }
    const Qubo& qubo() const { return qubo_; }
    const HybridLayout& layout() const { return layout_; }
    const BruteForceResult& truth() const { return *truth_; }
    /// Lagrange cost of a packed decision+slack point.
    double cost(std::uint64_t x) const { return cost_table_[x]; }
    bool feasible(std::uint64_t decision) const { return feasible_[decision] != 0; }
    bool optimal(std::uint64_t decision) const { return optimal_[decision] != 0; }
    /// max - min of the cost table (1 when the table is flat).
    double cost_spread() const { return cost_spread_; }

   private:
    ConstrainedBinaryProblem problem_;
    RepresentationAssignment assignment_;
    Multipliers mult_;
    BlockOrdering ordering_;
    GateMode mode_;
    Qubo qubo_;
    IsingCoeffs ising_;
    EnergyTable energy_;
    HybridLayout layout_;
    Statevector prepared_;  // preparation does not depend on the angles
    std::shared_ptr<const BruteForceResult> truth_;
    std::vector<double> cost_table_;   // over 2^qubo.n_bits
    std::vector<char> feasible_;       // over 2^n_decision
    std::vector<char> optimal_;
    double cost_spread_ = 1.0;
};

EvalResult evaluate_params(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                           const Multipliers& mult, const LayerParams& params,
                           BlockOrdering ordering = BlockOrdering::Natural, GateMode mode = GateMode::Oracle);

/// NelderMead: simplex from init_params with edge initial_step.
/// Coordinate: cyclic line scans over a grid of grid_points offsets per coordinate.
enum class SearchMethod { NelderMead, Coordinate };

struct OptimizerConfig {
    int max_iters = 60;
    /// Stop once an iteration improves the best cost by less than this (and by
    /// more than zero), or the simplex's cost spread falls below it.
    double exit_threshold = 1e-6;
    SearchMethod search = SearchMethod::NelderMead;
    std::uint64_t seed = 0;
    /// Initial edge length of the simplex.
    double initial_step = 0.3;
    int grid_points = 16;
    /// Search over gamma * cost_spread instead of gamma. The phase return turns
    /// by up to gamma * spread radians, so at large Lagrange weights a raw-gamma
    /// step of 0.1 already wraps the penalty phases many times over. When set,
    /// init_params.gamma and initial_step are read in scaled units; the trace
    /// and best_params always hold circuit angles.
    bool scale_gamma = true;
    LayerParams init_params = LayerParams::uniform(1, 0.1, 0.1);

    void validate() const;
};

struct TraceRecord {
    LayerParams params;
    EvalResult metrics;
};

/// Record k holds the best point seen after iteration k; record 0 is the initial point.
struct OptimizationTrace {
    std::vector<TraceRecord> records;
    LayerParams best_params;
    EvalResult best;
    int n_evaluations = 0;
    bool converged = false;
    double wall_time_s = 0.0;
};

OptimizationTrace optimize(const Evaluator& evaluator, const OptimizerConfig& config);
OptimizationTrace optimize(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                           const Multipliers& mult, const OptimizerConfig& config,
                           BlockOrdering ordering = BlockOrdering::Natural);

/// iter,gamma_0..,beta_0..,expected_cost,p_feasible,p_optimal,survival_prob
void write_trace_csv(const OptimizationTrace& trace, std::ostream& out);

}  // namespace hqo
