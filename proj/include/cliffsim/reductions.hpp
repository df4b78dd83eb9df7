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

#include <sstream>
#include <vector>

#include "cliffsim/circuit.hpp"

namespace cliffsim {

/// 3-CNF formula: literals are signed 1-based variable indices (negative =
/// negated). An empty clause list means the constant-true formula.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    void validate() const {
        if (num_vars < 0) throw DimensionError("negative variable count");
        for (const auto& cl : clauses) {
            if (cl.empty() || cl.size() > 3) {
                throw DimensionError("clauses must have 1 to 3 literals");
            }
            for (size_t i = 0; i < cl.size(); i++) {
                int v = cl[i] > 0 ? cl[i] : -cl[i];
                if (v < 1 || v > num_vars) throw DimensionError("literal out of range");
                for (size_t j = 0; j < i; j++) {
                    int w = cl[j] > 0 ? cl[j] : -cl[j];
                    if (v == w) throw DimensionError("clause repeats a variable");
                }
            }
        }
    }

    bool evaluate(uint32_t assignment) const {
        for (const auto& cl : clauses) {
            bool sat = false;
            for (int lit : cl) {
                int v = (lit > 0 ? lit : -lit) - 1;
                bool val = (assignment >> v) & 1;
                if (lit < 0) val = !val;
                sat |= val;
            }
            if (!sat) return false;
        }
        return true;
    }

    bool operator==(const CnfFormula& other) const = default;
};

/// Exact #f by enumeration. The independent oracle for the circuit encoding.
inline uint64_t count_sat_bruteforce(const CnfFormula& f) {
    f.validate();
    if (f.num_vars > 24) throw DimensionError("enumeration cap is 24 variables");
    uint64_t count = 0;
    for (uint32_t x = 0; x < (uint32_t{1} << f.num_vars); x++) {
        if (f.evaluate(x)) count++;
    }
    return count;
}

inline CnfFormula parse_dimacs(const std::string& text) {
    CnfFormula f;
    bool saw_header = false;
    int expected_clauses = -1;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    std::vector<int> current;
    while (std::getline(is, raw)) {
        lineno++;
        if (raw.empty() || raw[0] == 'c' || raw[0] == '%') continue;
        std::istringstream ls(raw);
        if (raw[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> f.num_vars >> expected_clauses) || fmt != "cnf") {
                throw ParseError(lineno, "bad DIMACS header, expected 'p cnf <vars> <clauses>'");
            }
            saw_header = true;
            continue;
        }
        if (!saw_header) throw ParseError(lineno, "clause before DIMACS header");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (!current.empty()) {
                    f.clauses.push_back(current);
                    current.clear();
                }
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) f.clauses.push_back(current);
    if (!saw_header) throw ParseError(lineno, "missing DIMACS header");
    try {
        f.validate();
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
    return f;
}

/// The adaptive Toffoli: measure one control and conditionally CX the
/// other control into the target. Correct on computational basis states
/// only (the measurement destroys superpositions of the measured control);
/// consumers guarantee that contract at the circuit-class level.
inline std::vector<Operation> toffoli_block(int control_a, int control_b, int target,
                                            int& next_outcome_id) {
    if (control_a == control_b || control_a == target || control_b == target) {
        throw DimensionError("toffoli lines must be distinct");
    }
    int id = next_outcome_id++;
    return {
        Measurement{control_a, id},
        ConditionalGate{gate(GateKind::CX, control_b, target), AffineCondition{{id}, false}},
    };
}

namespace detail {

inline void append_ops(CircuitProgram& c, std::vector<Operation> ops) {
    for (auto& op : ops) c.ops.push_back(std::move(op));
}

}  // namespace detail

/// Encode #SAT as an adaptive Clifford task with a single output line:
/// uniformly random inputs from H + measure, a reversible block computing
/// f via per-clause ORs (De Morgan over adaptive Toffolis) and a balanced
/// AND tree, so Prob(output = 1) = #f / 2^n.
inline CircuitProgram sharp_sat_circuit(const CnfFormula& f) {
    f.validate();
    CircuitProgram c;
    int next_line = f.num_vars;
    int next_outcome = 0;

    // Random assignment: H then measure each variable line.
    for (int v = 0; v < f.num_vars; v++) {
        c.ops.emplace_back(gate(GateKind::H, v));
        c.ops.emplace_back(Measurement{v, next_outcome++});
    }

    auto var_line = [](int lit) { return (lit > 0 ? lit : -lit) - 1; };
    // X-conjugate the variable lines so each holds the negated literal
    // value, then AND them into ancillas.
    auto with_negated_literals = [&](const std::vector<int>& clause, auto&& body) {
        for (int lit : clause) {
            if (lit > 0) c.ops.emplace_back(gate(GateKind::X, var_line(lit)));
        }
        body();
        for (int lit : clause) {
            if (lit > 0) c.ops.emplace_back(gate(GateKind::X, var_line(lit)));
        }
    };

    std::vector<int> clause_bits;
    for (const auto& clause : f.clauses) {
        if (clause.size() == 1) {
            // clause bit = literal value, copied out
            int anc = next_line++;
            c.ops.emplace_back(gate(GateKind::CX, var_line(clause[0]), anc));
            if (clause[0] < 0) c.ops.emplace_back(gate(GateKind::X, anc));
            clause_bits.push_back(anc);
            continue;
        }
        int and_bit = -1;
        with_negated_literals(clause, [&] {
            and_bit = next_line++;
            detail::append_ops(c, toffoli_block(var_line(clause[0]), var_line(clause[1]),
                                                and_bit, next_outcome));
            if (clause.size() == 3) {
                int and3 = next_line++;
                detail::append_ops(
                    c, toffoli_block(and_bit, var_line(clause[2]), and3, next_outcome));
                and_bit = and3;
            }
        });
        c.ops.emplace_back(gate(GateKind::X, and_bit));  // De Morgan: OR = NOT(AND of NOTs)
        clause_bits.push_back(and_bit);
    }

    // Balanced AND tree over the clause bits.
    while (clause_bits.size() > 1) {
        std::vector<int> next_level;
        for (size_t i = 0; i + 1 < clause_bits.size(); i += 2) {
            int anc = next_line++;
            detail::append_ops(
                c, toffoli_block(clause_bits[i], clause_bits[i + 1], anc, next_outcome));
            next_level.push_back(anc);
        }
        if (clause_bits.size() & 1) next_level.push_back(clause_bits.back());
        clause_bits = std::move(next_level);
    }
    int f_line;
    if (clause_bits.empty()) {
        // empty formula is constant true
        f_line = next_line++;
        c.ops.emplace_back(gate(GateKind::X, f_line));
    } else {
        f_line = clause_bits[0];
    }

    c.n = next_line;
    c.input = BitString(static_cast<size_t>(c.n));
    c.output_lines = {f_line};
    c.validate();
    return c;
}

enum class GadgetMode { Adaptive, Postselect };

struct GadgetRewriteReport {
    CircuitProgram rewritten;
    std::vector<int> ancilla_lines;
    GadgetMode mode;
};

/// Replace every S gate by the measurement gadget: a fresh |pi/4> ancilla,
/// CX from the data line into the ancilla, and a measurement of the
/// ancilla (outcome 0 leaves S|psi>, outcome 1 leaves e^{i pi/4} S^{-1}|psi>). In Adaptive mode a T correction conditioned on the outcome
/// restores S exactly (up to global phase), giving a Clifford adaptive
/// circuit. In Postselect mode no correction is added; conditioning every
/// ancilla outcome on 0 reproduces the original distribution as a quotient
/// of two marginals, so the ancilla lines join the output lines.
inline GadgetRewriteReport s_gadget_rewrite(const CircuitProgram& c, GadgetMode mode) {
    c.validate();
    int s_count = 0;
    int max_outcome = -1;
    for (const Operation& op : c.ops) {
        if (const auto* g = std::get_if<GateInstance>(&op)) {
            if (g->kind == GateKind::S) s_count++;
        } else if (const auto* m = std::get_if<Measurement>(&op)) {
            max_outcome = std::max(max_outcome, m->outcome_id);
        } else if (std::get<ConditionalGate>(op).gate.kind == GateKind::S) {
            throw UnsupportedGateError("cannot rewrite a conditionally applied S gate");
        }
    }

    GadgetRewriteReport report;
    report.mode = mode;
    if (s_count == 0) {
        report.rewritten = c;
        return report;
    }

    CircuitProgram out;
    out.n = c.n + s_count;
    // The gadget needs product inputs for its |pi/4> ancillas.
    std::vector<SingleQubitState> states;
    if (c.has_basis_input()) {
        const BitString& x = c.basis_input();
        for (size_t i = 0; i < x.size(); i++) states.push_back(x.get(i) ? ket1() : ket0());
    } else {
        states = std::get<std::vector<SingleQubitState>>(c.input);
    }
    for (int i = 0; i < s_count; i++) states.push_back(ket_pi4());
    out.input = std::move(states);

    int next_ancilla = c.n;
    int next_outcome = max_outcome + 1;
    for (const Operation& op : c.ops) {
        const auto* g = std::get_if<GateInstance>(&op);
        if (!g || g->kind != GateKind::S) {
            out.ops.push_back(op);
            continue;
        }
        int anc = next_ancilla++;
        int id = next_outcome++;
        report.ancilla_lines.push_back(anc);
        out.ops.emplace_back(gate(GateKind::CX, g->line0, anc));
        out.ops.emplace_back(Measurement{anc, id});
        if (mode == GadgetMode::Adaptive) {
            // outcome 1 leaves e^{i pi/4} S^{-1}; T = S^2 corrects it to S
            out.ops.emplace_back(
                ConditionalGate{gate(GateKind::T, g->line0), AffineCondition{{id}, false}});
        }
    }
    out.output_lines = c.output_lines;
    if (mode == GadgetMode::Postselect) {
        for (int anc : report.ancilla_lines) out.output_lines.push_back(anc);
        std::sort(out.output_lines.begin(), out.output_lines.end());
    }
    out.validate();
    report.rewritten = std::move(out);
    return report;
}

}  // namespace cliffsim
