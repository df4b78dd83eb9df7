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

#include <algorithm>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cliffsim/bitstring.hpp"
#include "cliffsim/gates.hpp"
#include "cliffsim/pauli.hpp"

namespace cliffsim {

/// Non-destructive computational-basis measurement of one line; the
/// post-measurement state stays on the line. outcome_id names the result
/// for later affine conditions.
struct Measurement {
    int line;
    int outcome_id;

    bool operator==(const Measurement& other) const = default;
};

/// XOR of a set of earlier outcomes plus a constant bit. The gate fires
/// when the form evaluates to 1.
struct AffineCondition {
    std::vector<int> outcome_ids;  // sorted, distinct
    bool constant = false;

    bool evaluate(const std::map<int, bool>& outcomes) const {
        bool v = constant;
        for (int id : outcome_ids) {
            auto it = outcomes.find(id);
            if (it == outcomes.end()) {
                throw SimulationError("condition references unknown outcome id");
            }
            v ^= it->second;
        }
        return v;
    }

    bool operator==(const AffineCondition& other) const = default;
};

struct ConditionalGate {
    GateInstance gate;
    AffineCondition condition;

    bool operator==(const ConditionalGate& other) const = default;
};

using Operation = std::variant<GateInstance, Measurement, ConditionalGate>;

/// Input: either a computational basis state or one normalized state per line.
using InputSpec = std::variant<BitString, std::vector<SingleQubitState>>;

/// An ordered Clifford(+S) circuit with input and declared output lines.
/// Values are immutable by convention once built; rewrites return new
/// programs.
struct CircuitProgram {
    int n = 0;
    std::vector<Operation> ops;
    InputSpec input;
    std::vector<int> output_lines;  // sorted, distinct, 0-based

    bool has_basis_input() const { return std::holds_alternative<BitString>(input); }

    const BitString& basis_input() const { return std::get<BitString>(input); }

    bool is_nonadaptive() const {
        for (const Operation& op : ops) {
            if (std::holds_alternative<ConditionalGate>(op)) return false;
        }
        return true;
    }

    bool is_unitary() const {
        for (const Operation& op : ops) {
            if (!std::holds_alternative<GateInstance>(op)) return false;
        }
        return true;
    }

    bool is_clifford_only() const {
        for (const Operation& op : ops) {
            if (const auto* g = std::get_if<GateInstance>(&op)) {
                if (!gate_is_clifford(g->kind)) return false;
            } else if (const auto* cg = std::get_if<ConditionalGate>(&op)) {
                if (!gate_is_clifford(cg->gate.kind)) return false;
            }
        }
        return true;
    }

    int measurement_count() const {
        int k = 0;
        for (const Operation& op : ops) {
            if (std::holds_alternative<Measurement>(op)) k++;
        }
        return k;
    }

    /// Gate list of a unitary circuit (throws otherwise).
    std::vector<GateInstance> gate_list() const {
        std::vector<GateInstance> gates;
        gates.reserve(ops.size());
        for (const Operation& op : ops) {
            if (const auto* g = std::get_if<GateInstance>(&op)) {
                gates.push_back(*g);
            } else {
                throw CircuitClassError("circuit contains measurements; not unitary");
            }
        }
        return gates;
    }

    /// Structural well-formedness: line ranges, input width, outcome-id
    /// discipline (defined once, referenced only later), output lines
    /// sorted and distinct.
    void validate() const {
        if (n <= 0) throw DimensionError("circuit width must be positive");
        if (has_basis_input()) {
            if (static_cast<int>(basis_input().size()) != n) {
                throw DimensionError("basis input length != width");
            }
        } else {
            if (static_cast<int>(std::get<std::vector<SingleQubitState>>(input).size()) != n) {
                throw DimensionError("need one input state per line");
            }
        }
        std::map<int, bool> seen;
        for (const Operation& op : ops) {
            if (const auto* g = std::get_if<GateInstance>(&op)) {
                check_gate_lines(*g, n);
            } else if (const auto* m = std::get_if<Measurement>(&op)) {
                if (m->line < 0 || m->line >= n) throw DimensionError("measured line out of range");
                if (seen.count(m->outcome_id)) {
                    throw DimensionError("outcome id produced more than once");
                }
                seen[m->outcome_id] = true;
            } else {
                const auto& cg = std::get<ConditionalGate>(op);
                check_gate_lines(cg.gate, n);
                for (int id : cg.condition.outcome_ids) {
                    if (!seen.count(id)) {
                        throw DimensionError("condition references outcome not yet measured");
                    }
                }
            }
        }
        if (output_lines.empty()) throw DimensionError("output_lines must be nonempty");
        if (!std::is_sorted(output_lines.begin(), output_lines.end())) {
            throw DimensionError("output_lines must be sorted");
        }
        for (size_t i = 0; i < output_lines.size(); i++) {
            if (output_lines[i] < 0 || output_lines[i] >= n) {
                throw DimensionError("output line out of range");
            }
            if (i > 0 && output_lines[i] == output_lines[i - 1]) {
                throw DimensionError("output lines must be distinct");
            }
        }
    }

    bool operator==(const CircuitProgram& other) const = default;
};

/// Programmatic adaptivity beyond affine conditions: a classical decision
/// procedure that, given the outcome history so far, emits the next block
/// of operations. An empty block terminates the run. Implementations must
/// be stateless given the history (engines may re-instantiate per run) and
/// must never emit more than max_operations() operations in total.
class AdaptiveController {
  public:
    virtual ~AdaptiveController() = default;
    virtual int max_operations() const = 0;
    virtual std::vector<Operation> next_block(const std::vector<bool>& outcome_history) = 0;
};

}  // namespace cliffsim
