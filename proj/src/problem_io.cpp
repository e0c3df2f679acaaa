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

#include <fstream>

#include "hqo/error.hpp"
#include "hqo/problem.hpp"

namespace hqo {

ConstrainedBinaryProblem problem_from_json(const nlohmann::json& j) {
    ConstrainedBinaryProblem p;
    try {
        p.objective = j.at("objective").get<std::vector<std::int64_t>>();
        if (j.contains("labels")) p.labels = j.at("labels").get<std::vector<std::string>>();
        if (j.contains("constraints")) {
            for (const auto& c : j.at("constraints")) {
                LinearConstraint lc;
                lc.coeffs = c.at("coeffs").get<std::vector<std::int64_t>>();
                lc.bound = c.at("bound").get<std::int64_t>();
                lc.label = c.value("label", "c" + std::to_string(p.constraints.size()));
                p.constraints.push_back(std::move(lc));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed problem document: ") + e.what());
    }
    p.validate();
    return p;
}

nlohmann::json problem_to_json(const ConstrainedBinaryProblem& problem) {
    nlohmann::json j;
    j["objective"] = problem.objective;
    j["labels"] = problem.labels;
    j["constraints"] = nlohmann::json::array();
    for (const auto& c : problem.constraints) {
        j["constraints"].push_back({{"coeffs", c.coeffs}, {"bound", c.bound}, {"label", c.label}});
    }
    return j;
}

ConstrainedBinaryProblem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("cannot parse " + path + ": " + e.what());
    }
    return problem_from_json(j);
}

void save_problem(const ConstrainedBinaryProblem& problem, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << problem_to_json(problem).dump(2) << '\n';
}

}  // namespace hqo
