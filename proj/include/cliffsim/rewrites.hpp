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

#include <vector>

#include "cliffsim/circuit.hpp"

namespace cliffsim {

namespace detail {

inline InputSpec extend_input_with_zeros(const InputSpec& input, int extra) {
    if (const auto* bits = std::get_if<BitString>(&input)) {
        BitString ext(bits->size() + static_cast<size_t>(extra));
        for (size_t i = 0; i < bits->size(); i++) ext.set(i, bits->get(i));
        return ext;
    }
    auto states = std::get<std::vector<SingleQubitState>>(input);
    for (int i = 0; i < extra; i++) states.push_back(ket0());
    return states;
}

}  // namespace detail

/// Replace each of the K measurements of a non-adaptive circuit by a CX
/// onto a fresh |0> ancilla. The result is a unitary circuit on n+K lines
/// with the same output distribution on the original output lines.
inline CircuitProgram unitarize(const CircuitProgram& c) {
    if (!c.is_nonadaptive()) {
        throw CircuitClassError("unitarize requires a non-adaptive circuit");
    }
    int k = c.measurement_count();
    if (k == 0) return c;

    CircuitProgram out;
    out.n = c.n + k;
    out.input = detail::extend_input_with_zeros(c.input, k);
    out.output_lines = c.output_lines;
    out.ops.reserve(c.ops.size());
    int next_ancilla = c.n;
    for (const Operation& op : c.ops) {
        if (const auto* m = std::get_if<Measurement>(&op)) {
            out.ops.emplace_back(gate(GateKind::CX, m->line, next_ancilla++));
        } else {
            out.ops.push_back(op);
        }
    }
    return out;
}

/// Rewrite so that every measurement happens on a fresh ancilla right after
/// a CX copy-out: the measured ancilla is never reused, intermediate
/// measurement lines are chosen non-adaptively, and output lines stay
/// disjoint from them. Works for adaptive circuits; outcome ids are kept,
/// so conditions transfer unchanged.
inline CircuitProgram defer_measurements(const CircuitProgram& c) {
    int k = c.measurement_count();
    if (k == 0) return c;

    CircuitProgram out;
    out.n = c.n + k;
    out.input = detail::extend_input_with_zeros(c.input, k);
    out.output_lines = c.output_lines;
    out.ops.reserve(c.ops.size() + static_cast<size_t>(k));
    int next_ancilla = c.n;
    for (const Operation& op : c.ops) {
        if (const auto* m = std::get_if<Measurement>(&op)) {
            out.ops.emplace_back(gate(GateKind::CX, m->line, next_ancilla));
            out.ops.emplace_back(Measurement{next_ancilla, m->outcome_id});
            next_ancilla++;
        } else {
            out.ops.push_back(op);
        }
    }
    return out;
}

/// Reduce a marginal query p(y on out_lines | input x) on a non-adaptive
/// Clifford circuit to the standardized form: a unitary circuit with
/// all-zero input whose queried outcome is all-zero on lines 0..m-1.
/// X gates fold in x and y; SWAPs move the queried lines to the front;
/// measurements are removed by unitarize.
inline CircuitProgram standardize_for_theorem4(const CircuitProgram& c,
                                               const BitString& x,
                                               const BitString& y,
                                               const std::vector<int>& out_lines) {
    if (!c.is_nonadaptive()) {
        throw CircuitClassError("standardization requires a non-adaptive circuit");
    }
    if (!c.is_clifford_only()) {
        throw UnsupportedGateError("standardization requires a Clifford-only circuit");
    }
    if (static_cast<int>(x.size()) != c.n) throw DimensionError("input length != width");
    if (y.size() != out_lines.size()) throw DimensionError("|y| != |out_lines|");

    size_t m = out_lines.size();
    CircuitProgram u = unitarize(c);

    CircuitProgram std_c;
    std_c.n = u.n;
    std_c.input = BitString(static_cast<size_t>(u.n));
    std_c.ops.reserve(u.ops.size() + x.popcount() + y.popcount() + m);
    for (size_t i = 0; i < x.size(); i++) {
        if (x.get(i)) std_c.ops.emplace_back(gate(GateKind::X, static_cast<int>(i)));
    }
    for (const Operation& op : u.ops) std_c.ops.push_back(op);
    for (size_t j = 0; j < m; j++) {
        if (out_lines[j] < 0 || out_lines[j] >= c.n) {
            throw DimensionError("queried output line out of range");
        }
        if (y.get(j)) std_c.ops.emplace_back(gate(GateKind::X, out_lines[j]));
    }
    // Swap network: bring out_lines[j] to position j, tracking displacements.
    std::vector<int> pos(static_cast<size_t>(u.n));
    for (size_t i = 0; i < pos.size(); i++) pos[i] = static_cast<int>(i);
    std::vector<int> where(pos.size());
    for (size_t i = 0; i < pos.size(); i++) where[i] = static_cast<int>(i);
    for (size_t j = 0; j < m; j++) {
        int cur = where[static_cast<size_t>(out_lines[j])];
        if (cur == static_cast<int>(j)) continue;
        std_c.ops.emplace_back(gate(GateKind::SWAP, static_cast<int>(j), cur));
        int other = pos[j];
        std::swap(pos[j], pos[static_cast<size_t>(cur)]);
        where[static_cast<size_t>(out_lines[j])] = static_cast<int>(j);
        where[static_cast<size_t>(other)] = cur;
    }
    std_c.output_lines.resize(m);
    for (size_t j = 0; j < m; j++) std_c.output_lines[j] = static_cast<int>(j);
    if (m == 0) std_c.output_lines = {0};  // placeholder to stay well-formed
    return std_c;
}

}  // namespace cliffsim
