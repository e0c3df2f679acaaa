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
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hqo/anneal.hpp"
#include "hqo/error.hpp"
#include "hqo/harness.hpp"
#include "hqo/zeno_analysis.hpp"

namespace {

using namespace hqo;

struct Common {
    std::string problem;
    std::string assign;
    double lambda = 0.0;  // 0: default_lambda(problem)
    double alpha = 1.0;
    int p = 1;
    int q = 1;
    std::string ordering = "natural";
    std::uint64_t seed = 0;
    int iters = 60;
    std::string out;
};

template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> values;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        std::istringstream cell(item);
        T v{};
        if (!(cell >> v) || !(cell >> std::ws).eof()) throw InputError("bad list entry '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw InputError("empty list");
    return values;
}

// Writes to --out, or stdout when it is empty or "-".
template <typename F>
void emit(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    write(out);
}

RepresentationAssignment assignment_for(const Common& c, const ConstrainedBinaryProblem& problem) {
    auto a = c.assign.empty() ? RepresentationAssignment(problem.n_constraints(), Representation::Qaoa)
                              : parse_assignment(c.assign);
    if (static_cast<int>(a.size()) != problem.n_constraints()) {
        throw InputError("assignment has " + std::to_string(a.size()) + " entries, problem has " +
                         std::to_string(problem.n_constraints()) + " constraints");
    }
    return a;
}

Multipliers multipliers_for(const Common& c, const ConstrainedBinaryProblem& problem) {
    return Multipliers::uniform(problem, c.lambda > 0.0 ? c.lambda : default_lambda(problem), c.alpha);
}

OptimizerConfig optimizer_for(const Common& c) {
    OptimizerConfig cfg;
    cfg.max_iters = c.iters;
    cfg.seed = c.seed;
    cfg.init_params = LayerParams::uniform(c.p, 0.1, 0.1, c.q);
    return cfg;
}

void add_common(CLI::App* cmd, Common& c, bool needs_assignment) {
    cmd->add_option("--problem", c.problem, "problem JSON file")->required();
    if (needs_assignment) cmd->add_option("--assign", c.assign, "per-constraint QAOA|DEPHASE|ZENO list (default all QAOA)");
    cmd->add_option("--lambda", c.lambda, "Lagrange weight for every constraint (default sum|objective|+1)");
    cmd->add_option("--alpha", c.alpha, "dephasing strength");
    cmd->add_option("--p", c.p, "layers");
    cmd->add_option("--q", c.q, "Zeno measurements per Zeno block");
    cmd->add_option("--ordering", c.ordering, "natural|zeno-first|dephase-first");
    cmd->add_option("--seed", c.seed, "optimizer seed");
    cmd->add_option("--iters", c.iters, "optimizer iterations");
    cmd->add_option("--out", c.out, "output file (default stdout)");
}

void print_metrics(const EvalResult& r) {
    std::cerr << "expected_cost=" << r.expected_cost << " p_feasible=" << r.p_feasible << " p_optimal=" << r.p_optimal
              << " survival=" << r.survival_prob << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"Hybrid QAOA / dephasing / Zeno constrained optimization on a statevector simulator"};
    app.require_subcommand(1);
    Common c;

    auto* solve = app.add_subcommand("solve", "optimize one assignment and write its trace");
    add_common(solve, c, true);
    std::string circuit_json;
    solve->add_option("--circuit-json", circuit_json, "also dump the gate-mode circuit at the best angles");

    auto* family = app.add_subcommand("sweep-family", "optimize all 3^n assignments");
    add_common(family, c, false);
    std::uint64_t shots = 0;
    int threads = 0;
    family->add_option("--shots", shots, "sample final metrics from this many shots (0: exact)");
    family->add_option("--threads", threads, "OpenMP threads (0: default)");

    auto* lagrange = app.add_subcommand("sweep-lagrange", "optimize one assignment for several lambdas");
    add_common(lagrange, c, true);
    std::string lambdas = "1,5,9,13";
    lagrange->add_option("--lambdas", lambdas, "ascending comma-separated lambdas");

    auto* ordering = app.add_subcommand("ordering", "compare block orderings for one assignment");
    add_common(ordering, c, true);

    auto* histogram = app.add_subcommand("histogram", "decision-state distribution at the optimized angles");
    add_common(histogram, c, true);

    auto* zeno_demo = app.add_subcommand("zeno-demo", "survival under N measurements of a driven qubit");
    std::string n_list = "1,2,4,8,16,32,64,128,256";
    double t = std::numbers::pi / 2;
    zeno_demo->add_option("--n-list", n_list, "measurement counts");
    zeno_demo->add_option("--t", t, "evolution time");
    zeno_demo->add_option("--out", c.out, "output file (default stdout)");

    auto* sa = app.add_subcommand("baseline-sa", "simulated annealing on the fully penalized QUBO");
    add_common(sa, c, false);
    AnnealSchedule sched;
    sa->add_option("--steps", sched.steps, "annealing steps");
    sa->add_option("--t-start", sched.t_start);
    sa->add_option("--t-end", sched.t_end);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (solve->parsed()) {
        const auto problem = load_problem(c.problem);
        const Evaluator ev(problem, assignment_for(c, problem), multipliers_for(c, problem), parse_ordering(c.ordering));
        const auto trace = optimize(ev, optimizer_for(c));
        emit(c.out, [&](std::ostream& o) { write_trace_csv(trace, o); });
        print_metrics(trace.best);
        if (!circuit_json.empty()) {
            const auto circuit = build_circuit(problem, ev.assignment(), multipliers_for(c, problem), trace.best_params,
                                               parse_ordering(c.ordering), GateMode::Gate);
            emit(circuit_json, [&](std::ostream& o) { o << circuit_to_json(circuit.gates).dump(1) << '\n'; });
        }
    } else if (family->parsed()) {
        const auto problem = load_problem(c.problem);
        SweepConfig cfg;
        cfg.optimizer = optimizer_for(c);
        if (!family->count("--iters")) cfg.optimizer.max_iters = SweepConfig{}.optimizer.max_iters;
        cfg.base_seed = c.seed;
        cfg.shots = shots;
        cfg.threads = threads;
        const auto rows = run_family_sweep(problem, multipliers_for(c, problem), cfg, parse_ordering(c.ordering));
        emit(c.out, [&](std::ostream& o) { write_family_csv(rows, o); });
        int failed = 0;
        for (const auto& r : rows) failed += !r.error.empty();
        std::cerr << rows.size() << " rows, " << failed << " failed\n";
    } else if (lagrange->parsed()) {
        const auto problem = load_problem(c.problem);
        const auto values = parse_list<double>(lambdas);
        const auto rows = lagrange_sweep(problem, assignment_for(c, problem), values, c.alpha, optimizer_for(c));
        emit(c.out, [&](std::ostream& o) { write_lagrange_csv(rows, o); });
    } else if (ordering->parsed()) {
        const auto problem = load_problem(c.problem);
        const auto rows =
            ordering_study(problem, assignment_for(c, problem), multipliers_for(c, problem), optimizer_for(c));
        emit(c.out, [&](std::ostream& o) { write_ordering_csv(rows, o); });
        std::cerr << "p_feasible spread " << p_feasible_spread(rows) << '\n';
    } else if (histogram->parsed()) {
        const auto problem = load_problem(c.problem);
        const auto a = assignment_for(c, problem);
        const auto m = multipliers_for(c, problem);
        const auto order = parse_ordering(c.ordering);
        const auto trace = optimize(Evaluator(problem, a, m, order), optimizer_for(c));
        const auto hist = state_visit_histogram(problem, a, m, trace.best_params, order);
        emit(c.out, [&](std::ostream& o) { write_histogram_csv(hist, problem, o); });
        std::cerr << "support " << hist.support_size << " of " << (1 << hist.n_decision) << " states\n";
    } else if (zeno_demo->parsed()) {
        const auto ns = parse_list<int>(n_list);
        const auto h = zeno::DenseHamiltonian::pauli_x();
        const std::vector<int> zero{0};
        const auto proj = zeno::Projector::onto(zero, 2);
        zeno::Vector psi0 = zeno::Vector::Zero(2);
        psi0(0) = 1.0;
        emit(c.out, [&](std::ostream& o) {
            o << "n,survival_empirical,survival_closed_form,survival_analytic,zeno_limit_error\n";
            o.precision(17);
            for (int n : ns) {
                if (n < 1) throw InputError("measurement counts must be positive");
                o << n << ',' << zeno::survival_empirical(h, proj, psi0, t, n) << ','
                  << std::pow(std::cos(t / n), 2 * n) << ',' << zeno::survival_analytic(h, psi0, t, n) << ','
                  << zeno::zeno_limit_error(h, proj, psi0, t, n) << '\n';
            }
        });
    } else if (sa->parsed()) {
        const auto problem = load_problem(c.problem);
        sched.seed = c.seed;
        const auto result = anneal(problem, multipliers_for(c, problem), sched);
        emit(c.out, [&](std::ostream& o) { write_anneal_csv(result, o); });
        const std::uint64_t x = result.best_state & ((std::uint64_t{1} << result.n_decision) - 1);
        std::cerr << "best cost " << result.best_cost << " objective " << problem.objective_value(x)
                  << (problem.feasible(x) ? " feasible\n" : " infeasible\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hqo::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const hqo::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hqo::LayoutError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
