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

#include "hqo/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>

#include "hqo/error.hpp"

namespace hqo {

Evaluator::Evaluator(const ConstrainedBinaryProblem& problem, RepresentationAssignment assignment, Multipliers mult,
                     BlockOrdering ordering, GateMode mode)
    : Evaluator(problem, std::move(assignment), std::move(mult), ordering, mode,
                std::make_shared<const BruteForceResult>(brute_force_solve(problem))) {}

Evaluator::Evaluator(const ConstrainedBinaryProblem& problem, RepresentationAssignment assignment, Multipliers mult,
                     BlockOrdering ordering, GateMode mode, std::shared_ptr<const BruteForceResult> truth)
    : problem_(problem),
      assignment_(std::move(assignment)),
      mult_(std::move(mult)),
      ordering_(ordering),
      mode_(mode),
      qubo_(compile_qubo(problem_, assignment_, mult_)),
      ising_(qubo_to_ising(qubo_)),
      energy_(ising_.z.empty() && ising_.zz.empty() ? nullptr : make_energy_table(ising_)),
      layout_(make_layout(problem_, assignment_)),
      prepared_(prepare_initial_state(problem_, assignment_, layout_, mode_)),
      truth_(std::move(truth)) {
    if (!truth_ || truth_->n_vars != problem_.n_vars()) throw InputError("brute-force result does not match problem");
    if (qubo_.n_bits > 30) throw CapacityError("cost table too large");
    cost_table_.resize(std::size_t{1} << qubo_.n_bits);
    for (std::uint64_t x = 0; x < cost_table_.size(); ++x) cost_table_[x] = qubo_.value(x);
    const auto [lo, hi] = std::minmax_element(cost_table_.begin(), cost_table_.end());
    if (*hi > *lo) cost_spread_ = *hi - *lo;
    feasible_.assign(std::size_t{1} << problem_.n_vars(), 0);
    optimal_.assign(feasible_.size(), 0);
    for (auto x : truth_->feasible) feasible_[x] = 1;
    for (auto x : truth_->optimal) optimal_[x] = 1;
}

HybridCircuit Evaluator::circuit(const LayerParams& params) const {
    return build_circuit(problem_, assignment_, mult_, params, ordering_, mode_, ising_, layout_, energy_);
}

Statevector Evaluator::final_state(const LayerParams& params) const {
    Statevector state = prepared_;
    apply_gates(state, circuit(params).body());
    return state;
}

EvalResult Evaluator::score(const Statevector& state) const {
    const std::uint64_t cost_mask = cost_table_.size() - 1;
    const std::uint64_t dec_mask = feasible_.size() - 1;
    const auto amps = state.amplitudes();
    double cost = 0.0, feas = 0.0, opt = 0.0;
    for (std::uint64_t z = 0; z < amps.size(); ++z) {
        const double p = std::norm(amps[z]);
        if (p == 0.0) continue;
        cost += p * cost_table_[z & cost_mask];
        const auto x = z & dec_mask;
        if (feasible_[x]) feas += p;
        if (optimal_[x]) opt += p;
    }
    return {cost, std::clamp(feas, 0.0, 1.0), std::clamp(opt, 0.0, 1.0), state.survival_prob()};
}

EvalResult Evaluator::operator()(const LayerParams& params) const { return score(final_state(params)); }

EvalResult evaluate_params(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                           const Multipliers& mult, const LayerParams& params, BlockOrdering ordering,
                           GateMode mode) {
    return Evaluator(problem, assignment, mult, ordering, mode)(params);
}

void OptimizerConfig::validate() const {
    if (max_iters < 1) throw InputError("max_iters must be at least 1");
    if (!(exit_threshold > 0.0)) throw InputError("exit_threshold must be positive");
    if (!(initial_step > 0.0)) throw InputError("initial_step must be positive");
    if (grid_points < 2) throw InputError("grid_points must be at least 2");
    init_params.validate();
}

namespace {

using Point = std::vector<double>;

Point pack(const LayerParams& p) {
    Point x = p.gamma;
    x.insert(x.end(), p.beta.begin(), p.beta.end());
    return x;
}

// Search coordinates hold gamma * scale.
LayerParams unpack(const Point& x, int q_measurements, double scale) {
    const auto half = static_cast<std::ptrdiff_t>(x.size() / 2);
    LayerParams p{Point(x.begin(), x.begin() + half), Point(x.begin() + half, x.end()), q_measurements};
    for (double& g : p.gamma) g /= scale;
    return p;
}

struct Scored {
    Point x;
    EvalResult r;
    double f = 0.0;
};

class Search {
   public:
    Search(const Evaluator& ev, const OptimizerConfig& cfg, OptimizationTrace& trace)
        : ev_(ev), cfg_(cfg), trace_(trace), scale_(cfg.scale_gamma ? ev.cost_spread() : 1.0) {}

    LayerParams params(const Point& x) const { return unpack(x, cfg_.init_params.q_measurements, scale_); }

    Scored eval(const Point& x, bool must_succeed = false) {
        ++trace_.n_evaluations;
        Scored s{x, {}, std::numeric_limits<double>::infinity()};
        try {
            s.r = ev_(params(x));
            s.f = s.r.expected_cost;
        } catch (const EmptySubspaceError&) {
            if (must_succeed) throw;
        }
        if (s.f < best_.f) best_ = s;
        return s;
    }

    /// Appends the best point so far; true when the search should stop.
    bool record(double spread) {
        const double prev = trace_.records.empty() ? best_.f : trace_.records.back().metrics.expected_cost;
        trace_.records.push_back({params(best_.x), best_.r});
        const double delta = prev - best_.f;
        if ((delta > 0.0 && delta < cfg_.exit_threshold) || spread < cfg_.exit_threshold) {
            trace_.converged = true;
            return true;
        }
        return static_cast<int>(trace_.records.size()) >= cfg_.max_iters;
    }

    const Scored& best() const { return best_; }

   private:
    const Evaluator& ev_;
    const OptimizerConfig& cfg_;
    OptimizationTrace& trace_;
    double scale_;
    Scored best_{{}, {}, std::numeric_limits<double>::infinity()};
};

void nelder_mead(Search& search, const OptimizerConfig& cfg, std::mt19937_64& rng) {
    const Point x0 = pack(cfg.init_params);
    const std::size_t n = x0.size();
    std::vector<Scored> simplex;
    simplex.push_back(search.eval(x0, true));
    if (search.record(std::numeric_limits<double>::infinity())) return;
    for (std::size_t i = 0; i < n; ++i) {
        Point x = x0;
        // A nonzero seed picks the direction of each initial edge.
        const double sign = cfg.seed == 0 ? 1.0 : ((rng() & 1U) ? 1.0 : -1.0);
        x[i] += sign * cfg.initial_step;
        simplex.push_back(search.eval(x));
    }
    auto by_cost = [](const Scored& a, const Scored& b) { return a.f < b.f; };

    while (true) {
        std::stable_sort(simplex.begin(), simplex.end(), by_cost);
        Point centroid(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].x[i] / static_cast<double>(n);
        }
        auto along = [&](double t) {
            Point x(n);
            for (std::size_t i = 0; i < n; ++i) x[i] = centroid[i] + t * (simplex[n].x[i] - centroid[i]);
            return x;
        };
        Scored reflected = search.eval(along(-1.0));
        if (reflected.f < simplex[0].f) {
            Scored expanded = search.eval(along(-2.0));
            simplex[n] = expanded.f < reflected.f ? expanded : reflected;
        } else if (reflected.f < simplex[n - 1].f) {
            simplex[n] = reflected;
        } else {
            const bool outside = reflected.f < simplex[n].f;
            Scored contracted = search.eval(along(outside ? -0.5 : 0.5));
            if (contracted.f < std::min(reflected.f, simplex[n].f)) {
                simplex[n] = contracted;
            } else {
                for (std::size_t k = 1; k <= n; ++k) {
                    Point x(n);
                    for (std::size_t i = 0; i < n; ++i) x[i] = simplex[0].x[i] + 0.5 * (simplex[k].x[i] - simplex[0].x[i]);
                    simplex[k] = search.eval(x);
                }
            }
        }
        const auto [lo, hi] = std::minmax_element(simplex.begin(), simplex.end(), by_cost);
        double spread = hi->f - lo->f;
        if (!std::isfinite(spread)) spread = std::numeric_limits<double>::infinity();
        if (search.record(spread)) return;
    }
}

// Line scans one coordinate at a time over grid_points evenly spaced offsets
// in [-span, span); the span starts at pi (a full period of the integer-energy
// phase) and halves after a full cycle without improvement.
void coordinate_grid(Search& search, const OptimizerConfig& cfg, std::mt19937_64& rng) {
    Scored current = search.eval(pack(cfg.init_params), true);
    if (search.record(std::numeric_limits<double>::infinity())) return;
    const std::size_t n = current.x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (cfg.seed != 0) std::shuffle(order.begin(), order.end(), rng);
    double span = std::numbers::pi;
    bool improved_this_cycle = false;
    for (std::size_t k = 0;; ++k) {
        const std::size_t i = order[k % n];
        const double before = current.f;
        for (int g = 0; g < cfg.grid_points; ++g) {
            const double offset = span * (-1.0 + 2.0 * g / cfg.grid_points);
            if (offset == 0.0) continue;
            Point x = current.x;
            x[i] += offset;
            Scored s = search.eval(x);
            if (s.f < current.f) current = s;
        }
        improved_this_cycle = improved_this_cycle || current.f < before;
        if (k % n == n - 1) {
            if (!improved_this_cycle) span *= 0.5;
            improved_this_cycle = false;
        }
        if (search.record(span < cfg.exit_threshold ? 0.0 : std::numeric_limits<double>::infinity())) return;
    }
}

}  // namespace

OptimizationTrace optimize(const Evaluator& evaluator, const OptimizerConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    OptimizationTrace trace;
    std::mt19937_64 rng(config.seed);
    Search search(evaluator, config, trace);
    if (config.search == SearchMethod::NelderMead) {
        nelder_mead(search, config, rng);
    } else {
        coordinate_grid(search, config, rng);
    }
    trace.best_params = search.params(search.best().x);
    trace.best = search.best().r;
    trace.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return trace;
}

OptimizationTrace optimize(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                           const Multipliers& mult, const OptimizerConfig& config, BlockOrdering ordering) {
    return optimize(Evaluator(problem, assignment, mult, ordering, GateMode::Oracle), config);
}

void write_trace_csv(const OptimizationTrace& trace, std::ostream& out) {
    const int p = trace.records.empty() ? 0 : trace.records.front().params.p_layers();
    out << "iter";
    for (int k = 0; k < p; ++k) out << ",gamma_" << k;
    for (int k = 0; k < p; ++k) out << ",beta_" << k;
    out << ",expected_cost,p_feasible,p_optimal,survival_prob\n";
    const auto old_precision = out.precision(17);
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const auto& r = trace.records[i];
        out << i;
        for (double g : r.params.gamma) out << ',' << g;
        for (double b : r.params.beta) out << ',' << b;
        out << ',' << r.metrics.expected_cost << ',' << r.metrics.p_feasible << ',' << r.metrics.p_optimal << ','
            << r.metrics.survival_prob << '\n';
    }
    out.precision(old_precision);
}

}  // namespace hqo
