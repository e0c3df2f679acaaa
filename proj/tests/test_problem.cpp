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

#include <cmath>
#include <random>

#include "hqo/error.hpp"
#include "hqo/problem.hpp"

using namespace hqo;

namespace {

const std::vector<std::int64_t> kWeights{1, 2, 3};

ConstrainedBinaryProblem cargo() { return cargo_instance(kWeights, 2, 3); }

RepresentationAssignment all(Representation r, std::size_t n = 6) { return RepresentationAssignment(n, r); }

// Independent reading of the cargo model: cargo i at position j is bit 2i + j.
struct CargoPoint {
    bool feasible;
    std::int64_t payload;
};

CargoPoint cargo_oracle(std::uint64_t x) {
    auto at = [x](int i, int j) { return static_cast<int>((x >> (2 * i + j)) & 1); };
    std::int64_t payload = 0;
    bool ok = true;
    for (int j = 0; j < 2; ++j) {
        int count = 0;
        for (int i = 0; i < 3; ++i) {
            count += at(i, j);
            payload += kWeights[i] * at(i, j);
        }
        ok = ok && count <= 1;
    }
    for (int i = 0; i < 3; ++i) ok = ok && at(i, 0) + at(i, 1) <= 1;
    ok = ok && payload <= 3;
    return {ok, payload};
}

}  // namespace

TEST(Problem, CargoShape) {
    const auto p = cargo();
    EXPECT_EQ(p.n_vars(), 6);
    EXPECT_EQ(p.n_constraints(), 6);
    EXPECT_EQ(p.objective, (std::vector<std::int64_t>{1, 1, 2, 2, 3, 3}));
    EXPECT_EQ(p.constraints[0].coeffs, (std::vector<std::int64_t>{1, 1, 2, 2, 3, 3}));
    EXPECT_EQ(p.constraints[0].bound, 3);
    EXPECT_EQ(p.constraints[0].max_lhs(), 12);
    EXPECT_EQ(p.labels[3], "x_1_1");
}

TEST(Problem, BruteForceMatchesCargoOracle) {
    const auto p = cargo();
    const auto r = brute_force_solve(p);
    EXPECT_EQ(r.opt_value, 3);
    EXPECT_EQ(r.optimal.size(), 4u);
    EXPECT_EQ(r.feasible.size(), 9u);
    std::vector<std::uint64_t> feasible, optimal;
    for (std::uint64_t x = 0; x < 64; ++x) {
        const auto c = cargo_oracle(x);
        EXPECT_EQ(p.feasible(x), c.feasible) << x;
        if (c.feasible) {
            feasible.push_back(x);
            EXPECT_EQ(p.objective_value(x), c.payload);
            if (c.payload == 3) optimal.push_back(x);
        }
    }
    EXPECT_EQ(r.feasible, feasible);
    EXPECT_EQ(r.optimal, optimal);
}

TEST(Problem, BruteForceLimits) {
    ConstrainedBinaryProblem big;
    big.objective.assign(kMaxBruteForceVars + 1, 1);
    EXPECT_THROW(brute_force_solve(big), CapacityError);
    ConstrainedBinaryProblem none;
    none.objective = {1};
    none.constraints.push_back({{1}, 0, "c"});
    none.constraints.push_back({{-1}, -1, "d"});  // x >= 1 and x <= 0
    EXPECT_THROW(brute_force_solve(none), Error);
}

TEST(Problem, SlackWidths) {
    const auto p = cargo();
    EXPECT_EQ(slack_width(p.constraints[0]), 2);
    for (int j = 1; j < 6; ++j) EXPECT_EQ(slack_width(p.constraints[j]), 1);
    LinearConstraint zero{{1, 1}, 0, "z"};
    EXPECT_EQ(slack_width(zero), 0);
}

TEST(Problem, QuboSizes) {
    const auto p = cargo();
    const auto m = Multipliers::uniform(p, 3.0);
    EXPECT_EQ(compile_qubo(p, all(Representation::Qaoa), m).n_bits, 13);
    auto a = all(Representation::Qaoa);
    a[0] = Representation::Zeno;
    const auto q = compile_qubo(p, a, m);
    EXPECT_EQ(q.n_bits, 11);
    EXPECT_TRUE(q.slack_map[0].empty());
    EXPECT_EQ(compile_qubo(p, all(Representation::Dephase), m).n_bits, 6);
}

TEST(Problem, QuboReconstructsPenaltyEverywhere) {
    const auto p = cargo();
    Multipliers m;
    m.lambda = {3.0, 1.5, 2.0, 0.5, 4.0, 1.0};
    const auto q = compile_qubo(p, all(Representation::Qaoa), m);
    ASSERT_EQ(q.n_bits, 13);
    for (std::uint64_t x = 0; x < (1u << 13); ++x) {
        double expect = -static_cast<double>(p.objective_value(x & 63));
        for (int j = 0; j < 6; ++j) {
            std::int64_t slack = 0;
            for (std::size_t k = 0; k < q.slack_map[j].size(); ++k) slack |= ((x >> q.slack_map[j][k]) & 1) << k;
            const double r = static_cast<double>(p.constraints[j].lhs(x & 63) + slack - p.constraints[j].bound);
            expect += m.lambda[j] * r * r;
        }
        ASSERT_NEAR(q.value(x), expect, 1e-9) << x;
    }
}

TEST(Problem, IsingMatchesQuboEverywhere) {
    const auto p = cargo();
    const auto q = compile_qubo(p, all(Representation::Qaoa), Multipliers::uniform(p, 13.0));
    const auto ising = qubo_to_ising(q);
    for (std::uint64_t x = 0; x < (1u << 13); ++x) ASSERT_NEAR(ising.value(x), q.value(x), 1e-9) << x;
    for (const auto& [ij, v] : ising.zz) EXPECT_LT(ij.first, ij.second);
}

TEST(Problem, IsingRandomQubos) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Qubo q;
        q.n_bits = q.n_decision = 1 + static_cast<int>(rng() % 7);
        const auto n = static_cast<std::size_t>(q.n_bits);
        q.q.assign(n * n, 0.0);
        q.b.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            q.b[i] = u(rng);
            for (std::size_t j = i; j < n; ++j) q.q[i * n + j] = q.q[j * n + i] = u(rng);
        }
        q.constant = u(rng);
        const auto ising = qubo_to_ising(q);
        for (std::uint64_t x = 0; x < (1u << q.n_bits); ++x) ASSERT_NEAR(ising.value(x), q.value(x), 1e-12);
    }
    Qubo bad;
    bad.n_bits = bad.n_decision = 2;
    bad.q = {0, 1, 0, 0};
    bad.b = {0, 0};
    EXPECT_THROW(qubo_to_ising(bad), ContractError);
}

TEST(Problem, DefaultLambda) { EXPECT_DOUBLE_EQ(default_lambda(cargo()), 13.0); }

TEST(Problem, AssignmentText) {
    const auto a = parse_assignment("qaoa,DEPHASE, Zeno");
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a[2], Representation::Zeno);
    EXPECT_EQ(format_assignment(a), "QAOA,DEPHASE,ZENO");
    EXPECT_THROW(parse_assignment("QAOA,FOO"), InputError);
}

TEST(Problem, JsonRoundTrip) {
    const auto p = cargo();
    const auto back = problem_from_json(problem_to_json(p));
    EXPECT_EQ(back.objective, p.objective);
    ASSERT_EQ(back.constraints.size(), p.constraints.size());
    for (std::size_t j = 0; j < p.constraints.size(); ++j) {
        EXPECT_EQ(back.constraints[j].coeffs, p.constraints[j].coeffs);
        EXPECT_EQ(back.constraints[j].bound, p.constraints[j].bound);
        EXPECT_EQ(back.constraints[j].label, p.constraints[j].label);
    }
    EXPECT_THROW(problem_from_json(nlohmann::json{{"objective", "x"}}), InputError);
    EXPECT_THROW(problem_from_json(nlohmann::json{{"objective", {1, 2}},
                                                  {"constraints", {{{"coeffs", {1}}, {"bound", 1}}}}}),
                 InputError);
    EXPECT_THROW(load_problem("/nonexistent/problem.json"), InputError);
}

TEST(Problem, MultiplierValidation) {
    const auto p = cargo();
    Multipliers m;
    m.lambda = {1.0};
    EXPECT_THROW(m.validate(p), InputError);
    m = Multipliers::uniform(p, -1.0);
    EXPECT_THROW(m.validate(p), InputError);
}
