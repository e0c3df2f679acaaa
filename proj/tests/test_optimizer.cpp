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

#include <gtest/gtest.h>

#include <sstream>

#include "hqo/error.hpp"
#include "hqo/optimizer.hpp"
#include "test_util.hpp"

using namespace hqo;
using R = Representation;

namespace {

ConstrainedBinaryProblem cargo() {
    const std::vector<std::int64_t> w{1, 2, 3};
    return cargo_instance(w, 2, 3);
}

const RepresentationAssignment kAllQaoa(6, R::Qaoa);

}  // namespace

TEST(Optimizer, ZeroAnglesGiveUniformMarginal) {
    const auto p = cargo();
    const auto r = evaluate_params(p, kAllQaoa, Multipliers::uniform(p, 13.0), LayerParams::uniform(1, 0.0, 0.0));
    EXPECT_NEAR(r.p_feasible, 9.0 / 64.0, 1e-12);
    EXPECT_NEAR(r.p_optimal, 4.0 / 64.0, 1e-12);
    EXPECT_DOUBLE_EQ(r.survival_prob, 1.0);
    // Uniform over all 2^13 QUBO points: the mean of the cost table.
    const auto q = compile_qubo(p, kAllQaoa, Multipliers::uniform(p, 13.0));
    double mean = 0.0;
    for (std::uint64_t x = 0; x < 8192; ++x) mean += q.value(x) / 8192.0;
    EXPECT_NEAR(r.expected_cost, mean, 1e-9);
}

TEST(Optimizer, ExpectedCostIsDirectSumOverBasisStates) {
    const auto p = cargo();
    const Evaluator ev(p, kAllQaoa, Multipliers::uniform(p, 13.0), BlockOrdering::Natural, GateMode::Gate);
    const LayerParams params{{0.31, -0.12}, {0.44, 0.27}, 1};
    const Statevector s = ev.final_state(params);
    double cost = 0.0, feas = 0.0;
    for (std::uint64_t z = 0; z < s.dim(); ++z) {
        const double prob = std::norm(s[z]);
        cost += prob * ev.qubo().value(z & 8191);
        if (p.feasible(z & 63)) feas += prob;
    }
    const auto r = ev(params);
    EXPECT_NEAR(r.expected_cost, cost, 1e-9);
    EXPECT_NEAR(r.p_feasible, feas, 1e-12);
}

TEST(Optimizer, ZenoPreselectionRaisesFeasibility) {
    const auto p = cargo();
    RepresentationAssignment a = kAllQaoa;
    a[0] = R::Zeno;
    const auto r = evaluate_params(p, a, Multipliers::uniform(p, 13.0), LayerParams::uniform(1, 0.0, 0.0));
    EXPECT_GT(r.p_feasible, 9.0 / 64.0);
    EXPECT_LT(r.survival_prob, 1.0);
}

TEST(Optimizer, SingleIterationReturnsInitialPoint) {
    const auto p = cargo();
    OptimizerConfig cfg;
    cfg.max_iters = 1;
    const Evaluator ev(p, kAllQaoa, Multipliers::uniform(p, 13.0));
    const auto t = optimize(ev, cfg);
    ASSERT_EQ(t.records.size(), 1u);
    // init gamma is in scaled units; the trace reports circuit angles.
    ASSERT_EQ(t.best_params.gamma.size(), 1u);
    EXPECT_DOUBLE_EQ(t.best_params.gamma[0], cfg.init_params.gamma[0] / ev.cost_spread());
    EXPECT_EQ(t.best_params.beta, cfg.init_params.beta);
    EXPECT_DOUBLE_EQ(t.best.expected_cost, ev(t.best_params).expected_cost);

    cfg.scale_gamma = false;
    const auto raw = optimize(ev, cfg);
    EXPECT_EQ(raw.best_params.gamma, cfg.init_params.gamma);
    EXPECT_DOUBLE_EQ(raw.best.expected_cost, ev(cfg.init_params).expected_cost);
}

TEST(Optimizer, CostSpreadMatchesTable) {
    const auto p = cargo();
    const Evaluator ev(p, kAllQaoa, Multipliers::uniform(p, 13.0));
    double lo = 1e300, hi = -1e300;
    for (std::uint64_t x = 0; x < 8192; ++x) {
        lo = std::min(lo, ev.qubo().value(x));
        hi = std::max(hi, ev.qubo().value(x));
    }
    EXPECT_DOUBLE_EQ(ev.cost_spread(), hi - lo);
}

TEST(Optimizer, BestSeenIsMonotoneAndImproves) {
    const auto p = cargo();
    for (SearchMethod m : {SearchMethod::NelderMead, SearchMethod::Coordinate}) {
        OptimizerConfig cfg;
        cfg.search = m;
        cfg.max_iters = 60;
        const auto t = optimize(p, kAllQaoa, Multipliers::uniform(p, 13.0), cfg);
        ASSERT_GE(t.records.size(), 2u);
        for (std::size_t i = 1; i < t.records.size(); ++i) {
            EXPECT_LE(t.records[i].metrics.expected_cost, t.records[i - 1].metrics.expected_cost);
        }
        EXPECT_LE(t.best.expected_cost, t.records.front().metrics.expected_cost);
        EXPECT_GT(t.best.p_optimal, 4.0 / 64.0);
        EXPECT_GT(t.best.p_feasible, 9.0 / 64.0);
        for (const auto& r : t.records) {
            EXPECT_GE(r.metrics.p_feasible, 0.0);
            EXPECT_LE(r.metrics.p_feasible, 1.0);
        }
    }
}

TEST(Optimizer, SeededRunsAreIdentical) {
    const auto p = cargo();
    OptimizerConfig cfg;
    cfg.seed = 42;
    cfg.max_iters = 25;
    RepresentationAssignment a{R::Zeno, R::Dephase, R::Qaoa, R::Qaoa, R::Dephase, R::Qaoa};
    const auto m = Multipliers::uniform(p, 13.0);
    const auto t1 = optimize(p, a, m, cfg);
    const auto t2 = optimize(p, a, m, cfg);
    ASSERT_EQ(t1.records.size(), t2.records.size());
    for (std::size_t i = 0; i < t1.records.size(); ++i) {
        EXPECT_EQ(t1.records[i].params.gamma, t2.records[i].params.gamma);
        EXPECT_EQ(t1.records[i].metrics.expected_cost, t2.records[i].metrics.expected_cost);
    }
}

TEST(Optimizer, TraceCsv) {
    const auto p = cargo();
    OptimizerConfig cfg;
    cfg.max_iters = 3;
    cfg.init_params = LayerParams::uniform(2, 0.1, 0.1);
    const auto t = optimize(p, kAllQaoa, Multipliers::uniform(p, 13.0), cfg);
    std::ostringstream out;
    write_trace_csv(t, out);
    std::istringstream in(out.str());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "iter,gamma_0,gamma_1,beta_0,beta_1,expected_cost,p_feasible,p_optimal,survival_prob");
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    EXPECT_EQ(lines, static_cast<int>(t.records.size()));
}

TEST(Optimizer, ConfigValidation) {
    OptimizerConfig cfg;
    cfg.max_iters = 0;
    EXPECT_THROW(cfg.validate(), InputError);
    cfg = {};
    cfg.exit_threshold = 0.0;
    EXPECT_THROW(cfg.validate(), InputError);
}
