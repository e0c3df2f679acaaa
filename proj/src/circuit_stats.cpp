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

#include <algorithm>
#include <numeric>

#include "hqo/error.hpp"
#include "hqo/hybrid.hpp"

namespace hqo {

namespace {

int find_root(std::vector<int>& parent, int a) {
    while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    return a;
}

}  // namespace

CircuitStats circuit_stats(std::span<const Gate> gates, int n_qubits, int n_parameters) {
    CircuitStats s;
    s.n_qubits = n_qubits;
    s.n_parameters = n_parameters;
    std::vector<int> level(static_cast<std::size_t>(n_qubits), 0);
    std::vector<int> parent(static_cast<std::size_t>(n_qubits));
    std::iota(parent.begin(), parent.end(), 0);

    for (const Gate& g : gates) {
        if (g.kind == GateKind::Oracle) {
            throw StatsUnavailableError("circuit contains basis oracles; build it in gate mode for statistics");
        }
        for (int q : g.qubits) {
            if (q < 0 || q >= n_qubits) throw ShapeError("gate qubit out of range");
        }
        ++s.size;
        if (g.kind == GateKind::Project) ++s.n_clbits;
        if (g.qubits.size() >= 2) ++s.non_local_gates;
        int top = 0;
        for (int q : g.qubits) top = std::max(top, level[q]);
        for (int q : g.qubits) level[q] = top + 1;
        for (std::size_t k = 1; k < g.qubits.size(); ++k) {
            parent[find_root(parent, g.qubits[k])] = find_root(parent, g.qubits[0]);
        }
    }
    s.depth = level.empty() ? 0 : *std::max_element(level.begin(), level.end());
    s.width = s.n_qubits + s.n_clbits;
    for (int q = 0; q < n_qubits; ++q) {
        if (find_root(parent, q) == q) ++s.n_unitary_factors;
    }
    return s;
}

CircuitStats circuit_stats(const HybridCircuit& circuit) {
    return circuit_stats(circuit.gates, circuit.layout.n_qubits, circuit.n_parameters);
}

nlohmann::json circuit_to_json(std::span<const Gate> gates) {
    auto out = nlohmann::json::array();
    for (const Gate& g : gates) {
        nlohmann::json j{{"kind", to_string(g.kind)}, {"qubits", g.qubits}};
        switch (g.kind) {
            case GateKind::RX:
            case GateKind::RZ:
            case GateKind::RZZ:
            case GateKind::CPHASE:
                j["angle"] = g.angle;
                break;
            case GateKind::Project:
                j["outcome"] = g.outcome;
                break;
            case GateKind::Oracle:
                j["label"] = g.oracle->label;
                j["inverted"] = g.inverted;
                break;
            default:
                break;
        }
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace hqo
