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

// Line-oriented circuit text format ('#' starts a comment, lines 1-indexed):
//
//   qubits <n>
//   input <bitstring>
//   input prod |0> |1> |+> |-> |pi/4> <re,im;re,im> ...
//   H i | T i | S i | X i | Y i | Z i | CZ i j | CX i j | SWAP i j
//   M i -> m<k>
//   COND m1^m3^1 : CX 2 4
//   out i j k
//
// Omitting `input` means the all-zero basis state. The condition language
// is deliberately affine-only (XOR of outcomes plus a constant); general
// adaptive strategies exist only programmatically via AdaptiveController
// and cannot be serialized here.

#include <charconv>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cliffsim/circuit.hpp"

namespace cliffsim {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(const std::string& tok, int lineno, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    }
    return v;
}

inline double parse_double(const std::string& tok, int lineno) {
    try {
        size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(lineno, "expected a number, got '" + tok + "'");
    }
}

inline SingleQubitState parse_state_token(const std::string& tok, int lineno) {
    if (tok == "|0>") return ket0();
    if (tok == "|1>") return ket1();
    if (tok == "|+>") return ket_plus();
    if (tok == "|->") return ket_minus();
    if (tok == "|pi/4>") return ket_pi4();
    // numeric form re,im;re,im
    auto semi = tok.find(';');
    if (semi == std::string::npos) {
        throw ParseError(lineno, "bad state token '" + tok + "'");
    }
    auto parse_complex = [&](const std::string& part) {
        auto comma = part.find(',');
        if (comma == std::string::npos) {
            throw ParseError(lineno, "bad amplitude '" + part + "'");
        }
        return std::complex<double>(parse_double(part.substr(0, comma), lineno),
                                    parse_double(part.substr(comma + 1), lineno));
    };
    SingleQubitState st{parse_complex(tok.substr(0, semi)),
                        parse_complex(tok.substr(semi + 1))};
    if (std::abs(st.norm_sq() - 1.0) > 1e-9) {
        throw ParseError(lineno, "state token '" + tok + "' is not normalized");
    }
    return st;
}

inline std::string render_state_token(const SingleQubitState& st) {
    if (st == ket0()) return "|0>";
    if (st == ket1()) return "|1>";
    if (st == ket_plus()) return "|+>";
    if (st == ket_minus()) return "|->";
    if (st == ket_pi4()) return "|pi/4>";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g;%.17g,%.17g", st.amp0.real(),
                  st.amp0.imag(), st.amp1.real(), st.amp1.imag());
    return buf;
}

inline int parse_outcome_id(const std::string& tok, int lineno) {
    if (tok.size() < 2 || tok[0] != 'm') {
        throw ParseError(lineno, "expected outcome id m<k>, got '" + tok + "'");
    }
    return parse_int(tok.substr(1), lineno, "outcome index");
}

inline GateKind parse_gate_kind(const std::string& tok, int lineno) {
    if (tok == "H") return GateKind::H;
    if (tok == "T") return GateKind::T;
    if (tok == "S") return GateKind::S;
    if (tok == "X") return GateKind::X;
    if (tok == "Y") return GateKind::Y;
    if (tok == "Z") return GateKind::Z;
    if (tok == "CZ") return GateKind::CZ;
    if (tok == "CX") return GateKind::CX;
    if (tok == "SWAP") return GateKind::SWAP;
    throw ParseError(lineno, "unknown gate '" + tok + "'");
}

inline GateInstance parse_gate_tokens(const std::vector<std::string>& toks, size_t start,
                                      int n, int lineno) {
    GateKind kind = parse_gate_kind(toks[start], lineno);
    size_t want = static_cast<size_t>(gate_arity(kind));
    if (toks.size() - start - 1 != want) {
        throw ParseError(lineno, std::string(gate_name(kind)) + " takes " +
                                     std::to_string(want) + " line argument(s)");
    }
    int l0 = parse_int(toks[start + 1], lineno, "line index") - 1;
    int l1 = -1;
    if (want == 2) l1 = parse_int(toks[start + 2], lineno, "line index") - 1;
    GateInstance g{kind, l0, l1};
    try {
        check_gate_lines(g, n);
    } catch (const DimensionError& e) {
        throw ParseError(lineno, e.what());
    }
    return g;
}

}  // namespace detail

inline CircuitProgram parse_circuit(const std::string& text) {
    CircuitProgram c;
    bool saw_qubits = false, saw_input = false, saw_out = false;
    std::vector<int> declared_outcomes;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        lineno++;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        auto toks = detail::split_ws(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (head == "qubits") {
            if (saw_qubits) throw ParseError(lineno, "duplicate qubits line");
            if (toks.size() != 2) throw ParseError(lineno, "usage: qubits <n>");
            c.n = detail::parse_int(toks[1], lineno, "qubit count");
            if (c.n <= 0) throw ParseError(lineno, "qubit count must be positive");
            c.input = BitString(static_cast<size_t>(c.n));
            saw_qubits = true;
            continue;
        }
        if (!saw_qubits) throw ParseError(lineno, "qubits line must come first");
        if (saw_out) throw ParseError(lineno, "out must be the last line");

        if (head == "input") {
            if (saw_input) throw ParseError(lineno, "duplicate input line");
            if (!c.ops.empty()) throw ParseError(lineno, "input must precede operations");
            saw_input = true;
            if (toks.size() >= 2 && toks[1] == "prod") {
                std::vector<SingleQubitState> states;
                for (size_t i = 2; i < toks.size(); i++) {
                    states.push_back(detail::parse_state_token(toks[i], lineno));
                }
                if (static_cast<int>(states.size()) != c.n) {
                    throw ParseError(lineno, "need exactly one state per qubit");
                }
                c.input = std::move(states);
            } else if (toks.size() == 2) {
                if (static_cast<int>(toks[1].size()) != c.n) {
                    throw ParseError(lineno, "input bitstring length != qubit count");
                }
                try {
                    c.input = BitString::from_string(toks[1]);
                } catch (const DimensionError& e) {
                    throw ParseError(lineno, e.what());
                }
            } else {
                throw ParseError(lineno, "usage: input <bits> | input prod <states>");
            }
            continue;
        }
        if (head == "out") {
            if (toks.size() < 2) throw ParseError(lineno, "out needs at least one line");
            for (size_t i = 1; i < toks.size(); i++) {
                c.output_lines.push_back(detail::parse_int(toks[i], lineno, "line index") - 1);
            }
            saw_out = true;
            continue;
        }
        if (head == "M") {
            if (toks.size() != 4 || toks[2] != "->") {
                throw ParseError(lineno, "usage: M <line> -> m<k>");
            }
            int line = detail::parse_int(toks[1], lineno, "line index") - 1;
            if (line < 0 || line >= c.n) throw ParseError(lineno, "measured line out of range");
            int id = detail::parse_outcome_id(toks[3], lineno);
            for (int d : declared_outcomes) {
                if (d == id) throw ParseError(lineno, "outcome id bound twice");
            }
            declared_outcomes.push_back(id);
            c.ops.emplace_back(Measurement{line, id});
            continue;
        }
        if (head == "COND") {
            size_t colon = 0;
            while (colon < toks.size() && toks[colon] != ":") colon++;
            if (colon != 2 || colon + 1 >= toks.size()) {
                throw ParseError(lineno, "usage: COND <form> : <gate>");
            }
            AffineCondition cond;
            std::istringstream fs(toks[1]);
            std::string term;
            while (std::getline(fs, term, '^')) {
                if (term == "1") {
                    cond.constant = !cond.constant;
                } else if (term == "0") {
                    // no-op term
                } else {
                    int id = detail::parse_outcome_id(term, lineno);
                    bool known = false;
                    for (int d : declared_outcomes) known |= (d == id);
                    if (!known) {
                        throw ParseError(lineno, "condition references unknown outcome m" +
                                                     std::to_string(id));
                    }
                    cond.outcome_ids.push_back(id);
                }
            }
            std::sort(cond.outcome_ids.begin(), cond.outcome_ids.end());
            cond.outcome_ids.erase(
                std::unique(cond.outcome_ids.begin(), cond.outcome_ids.end()),
                cond.outcome_ids.end());
            GateInstance g = detail::parse_gate_tokens(toks, colon + 1, c.n, lineno);
            c.ops.emplace_back(ConditionalGate{g, std::move(cond)});
            continue;
        }
        c.ops.emplace_back(detail::parse_gate_tokens(toks, 0, c.n, lineno));
    }
    if (!saw_qubits) throw ParseError(lineno, "missing qubits line");
    if (!saw_out) throw ParseError(lineno, "missing out line");
    try {
        c.validate();
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
    return c;
}

inline std::string render_circuit(const CircuitProgram& c) {
    std::ostringstream os;
    os << "qubits " << c.n << "\n";
    if (c.has_basis_input()) {
        os << "input " << c.basis_input().to_string() << "\n";
    } else {
        os << "input prod";
        for (const auto& st : std::get<std::vector<SingleQubitState>>(c.input)) {
            os << " " << detail::render_state_token(st);
        }
        os << "\n";
    }
    for (const Operation& op : c.ops) {
        if (const auto* g = std::get_if<GateInstance>(&op)) {
            os << gate_name(g->kind) << " " << g->line0 + 1;
            if (gate_arity(g->kind) == 2) os << " " << g->line1 + 1;
            os << "\n";
        } else if (const auto* m = std::get_if<Measurement>(&op)) {
            os << "M " << m->line + 1 << " -> m" << m->outcome_id << "\n";
        } else {
            const auto& cg = std::get<ConditionalGate>(op);
            os << "COND ";
            bool first = true;
            for (int id : cg.condition.outcome_ids) {
                if (!first) os << "^";
                os << "m" << id;
                first = false;
            }
            if (first) {
                os << (cg.condition.constant ? "1" : "0");
            } else if (cg.condition.constant) {
                os << "^1";
            }
            os << " : " << gate_name(cg.gate.kind) << " " << cg.gate.line0 + 1;
            if (gate_arity(cg.gate.kind) == 2) os << " " << cg.gate.line1 + 1;
            os << "\n";
        }
    }
    os << "out";
    for (int l : c.output_lines) os << " " << l + 1;
    os << "\n";
    return os.str();
}

}  // namespace cliffsim
