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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hqo {

/// sum_i coeffs[i] x_i <= bound
struct LinearConstraint {
    std::vector<std::int64_t> coeffs;
    std::int64_t bound = 0;
    std::string label;

    std::int64_t lhs(std::uint64_t x) const;
    bool satisfied(std::uint64_t x) const { return lhs(x) <= bound; }
    /// Largest and smallest achievable left-hand side over all binary points.
    std::int64_t max_lhs() const;
    std::int64_t min_lhs() const;
};

/// Maximize objective . x subject to every constraint, x binary.
/// Variable i is bit i of a packed assignment.
struct ConstrainedBinaryProblem {
    std::vector<std::int64_t> objective;
    std::vector<LinearConstraint> constraints;
    std::vector<std::string> labels;

    int n_vars() const { return static_cast<int>(objective.size()); }
    int n_constraints() const { return static_cast<int>(constraints.size()); }

    std::int64_t objective_value(std::uint64_t x) const;
    bool feasible(std::uint64_t x) const;

    /// Throws InputError on empty objective, length mismatches or negative bounds.
    void validate() const;
};

/// Cargo loading: x_{ij} = cargo i sits in position j, variable index i * n_positions + j.
/// Constraints in order: total weight <= W, one cargo per position, one position per cargo.
ConstrainedBinaryProblem cargo_instance(std::span<const std::int64_t> weights, int n_positions, std::int64_t max_weight);

enum class Representation { Qaoa, Dephase, Zeno };
using RepresentationAssignment = std::vector<Representation>;

const char* to_string(Representation r);
/// "QAOA,DEPHASE,ZENO" (case-insensitive). Throws InputError.
RepresentationAssignment parse_assignment(std::string_view text);
std::string format_assignment(const RepresentationAssignment& assignment);

/// Lagrange weight per constraint and the dephasing strength.
struct Multipliers {
    std::vector<double> lambda;
    double alpha = 1.0;

    /// Same lambda for every constraint.
    static Multipliers uniform(const ConstrainedBinaryProblem& problem, double lambda, double alpha = 1.0);
    void validate(const ConstrainedBinaryProblem& problem) const;
};

/// sum |objective| + 1: the smallest integer weight where any violation costs
/// more than the whole objective range.
double default_lambda(const ConstrainedBinaryProblem& problem);

/// x^T Q x + B . x + constant over n_bits (decision bits first, then slack bits).
struct Qubo {
    int n_bits = 0;
    int n_decision = 0;
    std::vector<double> q;  // row-major, symmetric, both halves stored
    std::vector<double> b;
    double constant = 0.0;
    /// Slack bit indices per constraint; empty for constraints without slack.
    std::vector<std::vector<int>> slack_map;

    double at(int i, int j) const { return q[static_cast<std::size_t>(i) * n_bits + j]; }
    double value(std::uint64_t x) const;
};

/// Slack bits needed so that lhs + slack can reach the bound from every feasible lhs.
int slack_width(const LinearConstraint& constraint);

/// Negated objective plus lambda_j (lhs_j + sum_k 2^k s_k - bound_j)^2 for every
/// QAOA-assigned constraint j. Other constraints contribute nothing.
Qubo compile_qubo(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                  const Multipliers& mult);

/// Diagonal Hamiltonian in spin variables s_i = 2 x_i - 1 (s_i = +1 when bit i is 1):
///   H = sum_{i<j} zz(i,j) s_i s_j + sum_i z(i) s_i + identity
struct IsingCoeffs {
    int n_bits = 0;
    std::map<std::pair<int, int>, double> zz;
    std::map<int, double> z;
    double identity = 0.0;

    double value(std::uint64_t x) const;
};

/// Throws ContractError if Q is not symmetric.
IsingCoeffs qubo_to_ising(const Qubo& qubo);

struct BruteForceResult {
    int n_vars = 0;
    std::int64_t opt_value = 0;
    std::vector<std::uint64_t> optimal;   // ascending
    std::vector<std::uint64_t> feasible;  // ascending

    std::vector<std::string> optimal_strings() const;
    std::vector<std::string> feasible_strings() const;
};

inline constexpr int kMaxBruteForceVars = 24;

/// Exhaustive enumeration. Throws CapacityError above kMaxBruteForceVars.
BruteForceResult brute_force_solve(const ConstrainedBinaryProblem& problem);

/// {"objective": [...], "constraints": [{"coeffs": [...], "bound": n, "label": s}], "labels": [...]}
ConstrainedBinaryProblem problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const ConstrainedBinaryProblem& problem);
ConstrainedBinaryProblem load_problem(const std::string& path);
void save_problem(const ConstrainedBinaryProblem& problem, const std::string& path);

}  // namespace hqo
