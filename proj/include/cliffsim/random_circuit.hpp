// Copyright 2026 The cliffsim authors
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

#include <random>

#include "cliffsim/circuit.hpp"

namespace cliffsim {

/// Uniformly random Clifford gate on n lines.
inline GateInstance random_clifford_gate(int n, std::mt19937_64& rng) {
    static constexpr GateKind kinds[] = {GateKind::H,  GateKind::T, GateKind::CZ,
                                         GateKind::X,  GateKind::Y, GateKind::Z,
                                         GateKind::CX, GateKind::SWAP};
    std::uniform_int_distribution<int> kind_dist(0, n >= 2 ? 7 : 5);
    // skip two-qubit kinds on a single line
    GateKind k;
    do {
        k = kinds[kind_dist(rng)];
    } while (n < 2 && gate_arity(k) == 2);
    std::uniform_int_distribution<int> line_dist(0, n - 1);
    int l0 = line_dist(rng);
    if (gate_arity(k) == 1) return gate(k, l0);
    int l1 = l0;
    while (l1 == l0) l1 = line_dist(rng);
    return gate(k, l0, l1);
}

/// Random unitary Clifford circuit (gates only).
inline std::vector<GateInstance> random_clifford_gates(int n, int count,
                                                       std::mt19937_64& rng) {
    std::vector<GateInstance> gates;
    gates.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; i++) gates.push_back(random_clifford_gate(n, rng));
    return gates;
}

struct RandomCircuitOptions {
    int measurements = 0;    // intermediate measurements, scattered uniformly
    bool basis_input = true; // random basis bits; otherwise caller fills states
};

/// Random non-adaptive Clifford circuit with optional intermediate
/// measurements, random basis input and all lines as outputs.
inline CircuitProgram random_nonadaptive_circuit(int n, int gate_count,
                                                 const RandomCircuitOptions& opts,
                                                 std::mt19937_64& rng) {
    CircuitProgram c;
    c.n = n;
    std::vector<GateInstance> gates = random_clifford_gates(n, gate_count, rng);
    std::uniform_int_distribution<size_t> pos_dist(0, gates.size());
    std::uniform_int_distribution<int> line_dist(0, n - 1);
    std::vector<size_t> mpos;
    for (int i = 0; i < opts.measurements; i++) mpos.push_back(pos_dist(rng));
    std::sort(mpos.begin(), mpos.end());
    size_t mi = 0;
    for (size_t g = 0; g <= gates.size(); g++) {
        while (mi < mpos.size() && mpos[mi] == g) {
            c.ops.emplace_back(Measurement{line_dist(rng), static_cast<int>(mi)});
            mi++;
        }
        if (g < gates.size()) c.ops.emplace_back(gates[g]);
    }
    BitString x(static_cast<size_t>(n));
    if (opts.basis_input) {
        for (int i = 0; i < n; i++) x.set(static_cast<size_t>(i), rng() & 1);
    }
    c.input = x;
    for (int i = 0; i < n; i++) c.output_lines.push_back(i);
    return c;
}

}  // namespace cliffsim
