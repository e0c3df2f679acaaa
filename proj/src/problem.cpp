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

#include "hqo/problem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include "hqo/arithmetic.hpp"
#include "hqo/error.hpp"
#include "hqo/statevector.hpp"

namespace hqo {

std::int64_t LinearConstraint::lhs(std::uint64_t x) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if ((x >> i) & 1U) s += coeffs[i];
    }
    return s;
}

std::int64_t LinearConstraint::max_lhs() const {
    std::int64_t s = 0;
    for (auto a : coeffs) s += std::max<std::int64_t>(a, 0);
    return s;
}

std::int64_t LinearConstraint::min_lhs() const {
    std::int64_t s = 0;
    for (auto a : coeffs) s += std::min<std::int64_t>(a, 0);
    return s;
}

std::int64_t ConstrainedBinaryProblem::objective_value(std::uint64_t x) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < objective.size(); ++i) {
        if ((x >> i) & 1U) s += objective[i];
    }
    return s;
}

bool ConstrainedBinaryProblem::feasible(std::uint64_t x) const {
    return std::all_of(constraints.begin(), constraints.end(),
                       [x](const LinearConstraint& c) { return c.satisfied(x); });
}

void ConstrainedBinaryProblem::validate() const {
    if (objective.empty()) throw InputError("problem has no variables");
    if (objective.size() > 62) throw CapacityError("more than 62 variables");
    if (!labels.empty() && labels.size() != objective.size()) {
        throw InputError("labels must name every variable");
    }
    for (std::size_t j = 0; j < constraints.size(); ++j) {
        const auto& c = constraints[j];
        if (c.coeffs.size() != objective.size()) {
            throw InputError("constraint " + std::to_string(j) + " has " + std::to_string(c.coeffs.size()) +
                             " coefficients for " + std::to_string(objective.size()) + " variables");
        }
        if (c.bound < 0) throw InputError("constraint " + std::to_string(j) + " has a negative bound");
    }
}

ConstrainedBinaryProblem cargo_instance(std::span<const std::int64_t> weights, int n_positions,
                                        std::int64_t max_weight) {
    if (weights.empty()) throw InputError("cargo instance needs at least one cargo");
    if (n_positions < 1) throw InputError("cargo instance needs at least one position");
    if (max_weight < 0) throw InputError("weight limit must be non-negative");
    const int n_cargo = static_cast<int>(weights.size());
    const int n = n_cargo * n_positions;
    auto var = [n_positions](int i, int j) { return i * n_positions + j; };

    ConstrainedBinaryProblem p;
    p.objective.resize(n);
    p.labels.resize(n);
    for (int i = 0; i < n_cargo; ++i) {
        for (int j = 0; j < n_positions; ++j) {
            p.objective[var(i, j)] = weights[i];
            p.labels[var(i, j)] = "x_" + std::to_string(i) + "_" + std::to_string(j);
        }
    }
    LinearConstraint weight{std::vector<std::int64_t>(n, 0), max_weight, "weight"};
    for (int i = 0; i < n_cargo; ++i) {
        for (int j = 0; j < n_positions; ++j) weight.coeffs[var(i, j)] = weights[i];
    }
    p.constraints.push_back(std::move(weight));
    for (int j = 0; j < n_positions; ++j) {
        LinearConstraint pos{std::vector<std::int64_t>(n, 0), 1, "position_" + std::to_string(j)};
        for (int i = 0; i < n_cargo; ++i) pos.coeffs[var(i, j)] = 1;
        p.constraints.push_back(std::move(pos));
    }
    for (int i = 0; i < n_cargo; ++i) {
        LinearConstraint cargo{std::vector<std::int64_t>(n, 0), 1, "cargo_" + std::to_string(i)};
        for (int j = 0; j < n_positions; ++j) cargo.coeffs[var(i, j)] = 1;
        p.constraints.push_back(std::move(cargo));
    }
    return p;
}

const char* to_string(Representation r) {
    switch (r) {
        case Representation::Qaoa: return "QAOA";
        case Representation::Dephase: return "DEPHASE";
        case Representation::Zeno: return "ZENO";
    }
    return "?";
}

RepresentationAssignment parse_assignment(std::string_view text) {
    RepresentationAssignment out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        std::string tok(text.substr(start, end - start));
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }),
                  tok.end());
        std::transform(tok.begin(), tok.end(), tok.begin(), [](unsigned char ch) { return std::toupper(ch); });
        if (tok == "QAOA" || tok == "Q") {
            out.push_back(Representation::Qaoa);
        } else if (tok == "DEPHASE" || tok == "DEPHASING" || tok == "D") {
            out.push_back(Representation::Dephase);
        } else if (tok == "ZENO" || tok == "Z") {
            out.push_back(Representation::Zeno);
        } else {
            throw InputError("unknown representation '" + tok + "'");
        }
        start = end + 1;
    }
    return out;
}

std::string format_assignment(const RepresentationAssignment& assignment) {
    std::string s;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (i) s += ',';
        s += to_string(assignment[i]);
    }
    return s;
}

Multipliers Multipliers::uniform(const ConstrainedBinaryProblem& problem, double lambda, double alpha) {
    return {std::vector<double>(problem.constraints.size(), lambda), alpha};
}

void Multipliers::validate(const ConstrainedBinaryProblem& problem) const {
    if (lambda.size() != problem.constraints.size()) throw InputError("need one multiplier per constraint");
    if (std::any_of(lambda.begin(), lambda.end(), [](double l) { return !(l >= 0.0); }) || !(alpha >= 0.0)) {
        throw InputError("multipliers must be non-negative");
    }
}

double default_lambda(const ConstrainedBinaryProblem& problem) {
    double s = 0.0;
    for (auto c : problem.objective) s += std::abs(static_cast<double>(c));
    return s + 1.0;
}

double Qubo::value(std::uint64_t x) const {
    double v = constant;
    for (int i = 0; i < n_bits; ++i) {
        if (!((x >> i) & 1U)) continue;
        v += b[i];
        const double* row = &q[static_cast<std::size_t>(i) * n_bits];
        for (int j = 0; j < n_bits; ++j) {
            if ((x >> j) & 1U) v += row[j];
        }
    }
    return v;
}

int slack_width(const LinearConstraint& constraint) {
    const std::int64_t range = constraint.bound - constraint.min_lhs();
    return range <= 0 ? 0 : register_width(range);
}

Qubo compile_qubo(const ConstrainedBinaryProblem& problem, const RepresentationAssignment& assignment,
                  const Multipliers& mult) {
    problem.validate();
    if (assignment.size() != problem.constraints.size()) {
        throw InputError("assignment length " + std::to_string(assignment.size()) + " does not match " +
                         std::to_string(problem.constraints.size()) + " constraints");
    }
    mult.validate(problem);

    Qubo qubo;
    qubo.n_decision = problem.n_vars();
    qubo.slack_map.resize(problem.constraints.size());
    int next = qubo.n_decision;
    for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
        if (assignment[j] != Representation::Qaoa) continue;
        const int w = slack_width(problem.constraints[j]);
        for (int k = 0; k < w; ++k) qubo.slack_map[j].push_back(next++);
    }
    qubo.n_bits = next;
    if (qubo.n_bits > 62) throw CapacityError("QUBO needs more than 62 bits");
    const auto n = static_cast<std::size_t>(qubo.n_bits);
    qubo.q.assign(n * n, 0.0);
    qubo.b.assign(n, 0.0);

    for (int i = 0; i < qubo.n_decision; ++i) qubo.b[i] -= static_cast<double>(problem.objective[i]);

    for (std::size_t j = 0; j < problem.constraints.size(); ++j) {
        if (assignment[j] != Representation::Qaoa) continue;
        const auto& c = problem.constraints[j];
        const double lambda = mult.lambda[j];
        std::vector<std::pair<int, double>> terms;
        for (int i = 0; i < qubo.n_decision; ++i) {
            if (c.coeffs[i] != 0) terms.emplace_back(i, static_cast<double>(c.coeffs[i]));
        }
        for (std::size_t k = 0; k < qubo.slack_map[j].size(); ++k) {
            terms.emplace_back(qubo.slack_map[j][k], std::ldexp(1.0, static_cast<int>(k)));
        }
        const double bound = static_cast<double>(c.bound);
        for (std::size_t p = 0; p < terms.size(); ++p) {
            const auto [ip, cp] = terms[p];
            qubo.b[ip] += lambda * (cp * cp - 2.0 * bound * cp);
            for (std::size_t r = p + 1; r < terms.size(); ++r) {
                const auto [ir, cr] = terms[r];
                qubo.q[ip * n + ir] += lambda * cp * cr;
                qubo.q[ir * n + ip] += lambda * cp * cr;
            }
        }
        qubo.constant += lambda * bound * bound;
    }
    return qubo;
}

double IsingCoeffs::value(std::uint64_t x) const {
    auto spin = [x](int i) { return ((x >> i) & 1U) ? 1.0 : -1.0; };
    double v = identity;
    for (const auto& [i, h] : z) v += h * spin(i);
    for (const auto& [ij, j] : zz) v += j * spin(ij.first) * spin(ij.second);
    return v;
}

IsingCoeffs qubo_to_ising(const Qubo& qubo) {
    const int n = qubo.n_bits;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = qubo.at(i, j);
            const double b = qubo.at(j, i);
            if (std::abs(a - b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) {
                throw ContractError("QUBO matrix is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
            }
        }
    }
    IsingCoeffs out;
    out.n_bits = n;
    double sum_q = 0.0;
    double trace_q = 0.0;
    double sum_b = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += qubo.at(i, j);
        sum_q += row;
        trace_q += qubo.at(i, i);
        sum_b += qubo.b[i];
        const double h = 0.5 * (row + qubo.b[i]);
        if (h != 0.0) out.z[i] = h;
        for (int j = i + 1; j < n; ++j) {
            const double coupling = 0.25 * (qubo.at(i, j) + qubo.at(j, i));
            if (coupling != 0.0) out.zz[{i, j}] = coupling;
        }
    }
    out.identity = 0.25 * sum_q + 0.25 * trace_q + 0.5 * sum_b + qubo.constant;
    return out;
}

std::vector<std::string> BruteForceResult::optimal_strings() const {
    std::vector<std::string> s;
    for (auto x : optimal) s.push_back(basis_string(x, n_vars));
    return s;
}

std::vector<std::string> BruteForceResult::feasible_strings() const {
    std::vector<std::string> s;
    for (auto x : feasible) s.push_back(basis_string(x, n_vars));
    return s;
}

BruteForceResult brute_force_solve(const ConstrainedBinaryProblem& problem) {
    problem.validate();
    if (problem.n_vars() > kMaxBruteForceVars) {
        throw CapacityError("brute force limited to " + std::to_string(kMaxBruteForceVars) + " variables");
    }
    BruteForceResult r;
    r.n_vars = problem.n_vars();
    r.opt_value = std::numeric_limits<std::int64_t>::min();
    const std::uint64_t count = std::uint64_t{1} << problem.n_vars();
    for (std::uint64_t x = 0; x < count; ++x) {
        if (!problem.feasible(x)) continue;
        r.feasible.push_back(x);
        const std::int64_t v = problem.objective_value(x);
        if (v > r.opt_value) {
            r.opt_value = v;
            r.optimal.clear();
        }
        if (v == r.opt_value) r.optimal.push_back(x);
    }
    if (r.feasible.empty()) throw InputError("problem has no feasible point");
    return r;
}

}  // namespace hqo
