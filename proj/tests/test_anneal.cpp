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

#include "hqo/anneal.hpp"
#include "hqo/error.hpp"

using namespace hqo;

namespace {

ConstrainedBinaryProblem cargo() {
    const std::vector<std::int64_t> w{1, 2, 3};
    return cargo_instance(w, 2, 3);
}

double qubo_minimum(const Qubo& q) {
    double best = q.value(0);
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << q.n_bits); ++x) best = std::min(best, q.value(x));
    return best;
}

}  // namespace

TEST(Anneal, SingleStepKeepsStart) {
    const auto p = cargo();
    AnnealSchedule s;
    s.steps = 1;
    s.seed = 9;
    const auto r = anneal(p, Multipliers::uniform(p, 13.0), s);
    ASSERT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(r.best_state, r.trace[0].state);
}

TEST(Anneal, OneStatePerStepAndDeterministic) {
    const auto p = cargo();
    AnnealSchedule s;
    s.steps = 700;
    s.seed = 5;
    const auto a = anneal(p, Multipliers::uniform(p, 13.0), s);
    const auto b = anneal(p, Multipliers::uniform(p, 13.0), s);
    ASSERT_EQ(a.trace.size(), 700u);
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        EXPECT_EQ(a.trace[i].step, static_cast<int>(i));
        EXPECT_EQ(a.trace[i].state, b.trace[i].state);
    }
    const auto q = compile_qubo(p, RepresentationAssignment(6, Representation::Qaoa), Multipliers::uniform(p, 13.0));
    for (const auto& v : a.trace) EXPECT_DOUBLE_EQ(v.cost, q.value(v.state));
}

TEST(Anneal, ReachesQuboOptimum) {
    const auto p = cargo();
    const auto m = Multipliers::uniform(p, 13.0);
    const auto q = compile_qubo(p, RepresentationAssignment(6, Representation::Qaoa), m);
    const double opt = qubo_minimum(q);
    EXPECT_DOUBLE_EQ(opt, -3.0);
    AnnealSchedule s;
    s.seed = 1;
    const auto r = anneal(p, m, s);
    EXPECT_DOUBLE_EQ(r.best_cost, opt);
    EXPECT_TRUE(p.feasible(r.best_state & 63));
    EXPECT_EQ(p.objective_value(r.best_state & 63), 3);
}

TEST(Anneal, GreedyAtZeroTemperature) {
    const auto p = cargo();
    AnnealSchedule s;
    s.t_start = s.t_end = 1e-6;
    s.steps = 300;
    s.seed = 3;
    const auto r = anneal(p, Multipliers::uniform(p, 13.0), s);
    EXPECT_LE(r.best_cost, r.trace.front().cost);
    for (std::size_t i = 1; i < r.trace.size(); ++i) EXPECT_LE(r.trace[i].cost, r.trace[i - 1].cost);
}

TEST(Anneal, ScheduleAndCsv) {
    AnnealSchedule s;
    s.t_start = 8;
    s.t_end = 2;
    s.steps = 3;
    EXPECT_DOUBLE_EQ(s.temperature(0), 8.0);
    EXPECT_DOUBLE_EQ(s.temperature(1), 4.0);
    EXPECT_DOUBLE_EQ(s.temperature(2), 2.0);
    s.t_end = 9;
    EXPECT_THROW(s.validate(), InputError);

    const auto p = cargo();
    AnnealSchedule small;
    small.steps = 4;
    std::ostringstream out;
    write_anneal_csv(anneal(p, Multipliers::uniform(p, 13.0), small), out);
    EXPECT_EQ(out.str().substr(0, 24), "step,state,cost,accepted");
    {
        const std::string text = out.str();
        EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
    }
}
