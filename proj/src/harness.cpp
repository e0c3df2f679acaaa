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

#include "hqo/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include <omp.h>

#include "hqo/error.hpp"

namespace hqo {

std::vector<RepresentationAssignment> enumerate_assignments(int n_constraints) {
    if (n_constraints < 0) throw InputError("negative constraint count");
    if (n_constraints > kMaxSweepConstraints) {
        throw CapacityError("family sweeps are limited to " + std::to_string(kMaxSweepConstraints) + " constraints");
    }
    std::size_t total = 1;
    for (int i = 0; i < n_constraints; ++i) total *= 3;
    std::vector<RepresentationAssignment> out;
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        RepresentationAssignment a(static_cast<std::size_t>(n_constraints));
        std::size_t rest = k;
        for (int j = n_constraints - 1; j >= 0; --j) {
            a[j] = static_cast<Representation>(rest % 3);
            rest /= 3;
        }
        out.push_back(std::move(a));
    }
    return out;
}

EvalResult sampled_metrics(const Evaluator& evaluator, const Statevector& state, std::uint64_t shots,
                           std::uint64_t seed) {
    if (shots == 0) throw InputError("need at least one shot");
    const std::uint64_t cost_mask = (std::uint64_t{1} << evaluator.qubo().n_bits) - 1;
    const std::uint64_t dec_mask = (std::uint64_t{1} << evaluator.problem().n_vars()) - 1;
    EvalResult r;
    for (const auto& [key, count] : sample(state, shots, seed)) {
        const std::uint64_t z = std::stoull(key, nullptr, 2);
        const double w = static_cast<double>(count) / static_cast<double>(shots);
        r.expected_cost += w * evaluator.cost(z & cost_mask);
        if (evaluator.feasible(z & dec_mask)) r.p_feasible += w;
        if (evaluator.optimal(z & dec_mask)) r.p_optimal += w;
    }
    r.survival_prob = state.survival_prob();
    return r;
}

SweepRow run_sweep_row(const ConstrainedBinaryProblem& problem, std::shared_ptr<const BruteForceResult> truth,
                       const Multipliers& mult, const RepresentationAssignment& assignment, std::size_t index,
                       const SweepConfig& config, BlockOrdering ordering) {
    const auto start = std::chrono::steady_clock::now();
    SweepRow row;
    row.index = index;
    row.assignment = assignment;
    try {
        const Evaluator ev(problem, assignment, mult, ordering, GateMode::Oracle, std::move(truth));
        row.stats = circuit_stats(build_circuit(problem, assignment, mult, config.optimizer.init_params, ordering,
                                                GateMode::Gate));
        OptimizerConfig oc = config.optimizer;
        oc.seed = config.base_seed + index;
        const auto trace = optimize(ev, oc);
        row.best_params = trace.best_params;
        row.metrics = trace.best;
        if (config.shots > 0) {
            row.metrics = sampled_metrics(ev, ev.final_state(trace.best_params), config.shots, oc.seed);
        }
    } catch (const Error& e) {
        row.error = e.what();
    }
    row.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<SweepRow> run_family_sweep(const ConstrainedBinaryProblem& problem, const Multipliers& mult,
                                       const SweepConfig& config, BlockOrdering ordering,
                                       std::span<const std::size_t> rows) {
    config.optimizer.validate();
    mult.validate(problem);
    const auto all = enumerate_assignments(problem.n_constraints());
    std::vector<std::size_t> indices(rows.begin(), rows.end());
    if (indices.empty()) {
        indices.resize(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) indices[i] = i;
    }
    for (std::size_t i : indices) {
        if (i >= all.size()) throw InputError("sweep row " + std::to_string(i) + " out of range");
    }
    const auto truth = std::make_shared<const BruteForceResult>(brute_force_solve(problem));

    std::vector<SweepRow> out(indices.size());
    const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
    // Amplitude kernels stay serial inside a row; parallelism is across rows.
    const auto saved = kernels::default_backend();
    if (threads > 1) kernels::set_default_backend(kernels::Backend::Serial);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t k = 0; k < indices.size(); ++k) {
        out[k] = run_sweep_row(problem, truth, mult, all[indices[k]], indices[k], config, ordering);
    }
    kernels::set_default_backend(saved);
    return out;
}

void write_family_csv(std::span<const SweepRow> rows, std::ostream& out) {
    out << "assignment,non_local,qubits,clbits,depth,width,size,params,factors,expected_cost,p_feasible,p_optimal,"
           "survival,wall_time_s,error\n";
    const auto old_precision = out.precision(12);
    for (const auto& r : rows) {
        out << '"' << format_assignment(r.assignment) << '"';
        if (r.stats) {
            const auto& s = *r.stats;
            out << ',' << s.non_local_gates << ',' << s.n_qubits << ',' << s.n_clbits << ',' << s.depth << ','
                << s.width << ',' << s.size << ',' << s.n_parameters << ',' << s.n_unitary_factors;
        } else {
            out << ",,,,,,,,";
        }
        if (r.error.empty()) {
            out << ',' << r.metrics.expected_cost << ',' << r.metrics.p_feasible << ',' << r.metrics.p_optimal << ','
                << r.metrics.survival_prob;
        } else {
            out << ",,,,";
        }
        std::string err = r.error;
        std::replace(err.begin(), err.end(), '"', '\'');
        out << ',' << r.wall_time_s << ",\"" << err << "\"\n";
    }
    out.precision(old_precision);
}

std::vector<LagrangeRow> lagrange_sweep(const ConstrainedBinaryProblem& problem,
                                        const RepresentationAssignment& assignment, std::span<const double> lambdas,
                                        double alpha, const OptimizerConfig& config) {
    if (lambdas.empty()) throw InputError("need at least one multiplier value");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0.0)) throw InputError("multipliers must be positive");
        if (i > 0 && !(lambdas[i] > lambdas[i - 1])) throw InputError("multipliers must be strictly ascending");
    }
    const auto truth = std::make_shared<const BruteForceResult>(brute_force_solve(problem));
    std::vector<LagrangeRow> out;
    for (double lambda : lambdas) {
        const Evaluator ev(problem, assignment, Multipliers::uniform(problem, lambda, alpha), BlockOrdering::Natural,
                           GateMode::Oracle, truth);
        const auto trace = optimize(ev, config);
        out.push_back({lambda, trace.best, trace.best_params});
    }
    return out;
}

void write_lagrange_csv(std::span<const LagrangeRow> rows, std::ostream& out) {
    out << "lambda,expected_cost,p_feasible,p_optimal,survival_prob\n";
    const auto old_precision = out.precision(12);
    for (const auto& r : rows) {
        out << r.lambda << ',' << r.metrics.expected_cost << ',' << r.metrics.p_feasible << ',' << r.metrics.p_optimal
            << ',' << r.metrics.survival_prob << '\n';
    }
    out.precision(old_precision);
}

StateHistogram state_visit_histogram(const ConstrainedBinaryProblem& problem,
                                     const RepresentationAssignment& assignment, const Multipliers& mult,
                                     const LayerParams& params, BlockOrdering ordering) {
    const auto state =
        run_circuit(build_circuit(problem, assignment, mult, params, ordering, GateMode::Oracle));
    StateHistogram h;
    h.n_decision = problem.n_vars();
    h.probability = low_marginal(state, h.n_decision);
    h.support_size = static_cast<int>(std::count_if(h.probability.begin(), h.probability.end(),
                                                    [](double p) { return p > kSupportThreshold; }));
    return h;
}

void write_histogram_csv(const StateHistogram& hist, const ConstrainedBinaryProblem& problem, std::ostream& out) {
    out << "state,probability,feasible\n";
    const auto old_precision = out.precision(12);
    for (std::uint64_t x = 0; x < hist.probability.size(); ++x) {
        out << basis_string(x, hist.n_decision) << ',' << hist.probability[x] << ',' << (problem.feasible(x) ? 1 : 0)
            << '\n';
    }
    out.precision(old_precision);
}

std::vector<OrderingRow> ordering_study(const ConstrainedBinaryProblem& problem,
                                        const RepresentationAssignment& assignment, const Multipliers& mult,
                                        const OptimizerConfig& config, std::span<const BlockOrdering> orderings) {
    const bool has_dephase = std::count(assignment.begin(), assignment.end(), Representation::Dephase) > 0;
    const bool has_zeno = std::count(assignment.begin(), assignment.end(), Representation::Zeno) > 0;
    if (!has_dephase || !has_zeno) {
        throw InputError("ordering study needs at least one DEPHASE and one ZENO constraint");
    }
    static constexpr BlockOrdering kAll[] = {BlockOrdering::Natural, BlockOrdering::ZenoFirst,
                                             BlockOrdering::DephaseFirst};
    if (orderings.empty()) orderings = kAll;
    const auto truth = std::make_shared<const BruteForceResult>(brute_force_solve(problem));
    std::vector<OrderingRow> out;
    for (BlockOrdering o : orderings) {
        const Evaluator ev(problem, assignment, mult, o, GateMode::Oracle, truth);
        const auto trace = optimize(ev, config);
        out.push_back({o, trace.best, trace.best_params});
    }
    return out;
}

double p_feasible_spread(std::span<const OrderingRow> rows) {
    if (rows.empty()) return 0.0;
    const auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.metrics.p_feasible < b.metrics.p_feasible;
    });
    return hi->metrics.p_feasible - lo->metrics.p_feasible;
}

void write_ordering_csv(std::span<const OrderingRow> rows, std::ostream& out) {
    out << "ordering,expected_cost,p_feasible,p_optimal,survival_prob\n";
    const auto old_precision = out.precision(12);
    for (const auto& r : rows) {
        out << to_string(r.ordering) << ',' << r.metrics.expected_cost << ',' << r.metrics.p_feasible << ','
            << r.metrics.p_optimal << ',' << r.metrics.survival_prob << '\n';
    }
    out.precision(old_precision);
}

}  // namespace hqo
