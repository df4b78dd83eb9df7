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

#include <string>

#include "cliffsim/circuit.hpp"

namespace cliffsim {

/// The three binary axes that place a Clifford task in the complexity table.
struct TaskClass {
    bool adaptive;
    bool product_input;
    bool many_output;

    bool operator==(const TaskClass& other) const = default;
};

inline TaskClass classify_task(const CircuitProgram& c) {
    return TaskClass{!c.is_nonadaptive(), !c.has_basis_input(), c.output_lines.size() > 1};
}

enum class SimComplexity {
    ClP,         // classically efficiently simulatable
    SharpPHard,  // as hard as #SAT
    QCHard,      // encodes universal quantum computation
    PHCollapse,  // efficient simulation collapses the polynomial hierarchy
};

/// Complexity of STRONG simulation for a task class.
inline SimComplexity strong_complexity(const TaskClass& t) {
    if (t.adaptive) return SimComplexity::SharpPHard;               // Theorem 2
    if (t.product_input && t.many_output) return SimComplexity::SharpPHard;  // Theorem 6
    return SimComplexity::ClP;  // Theorems 1 and 4
}

/// Complexity of WEAK simulation for a task class.
inline SimComplexity weak_complexity(const TaskClass& t) {
    if (!t.product_input) return SimComplexity::ClP;  // Theorem 5 (and Theorem 4 + chain rule)
    if (t.adaptive) return SimComplexity::QCHard;     // Theorem 3
    if (t.many_output) return SimComplexity::PHCollapse;  // Theorem 7
    return SimComplexity::ClP;  // Theorem 1 + chain rule
}

inline std::string complexity_name(SimComplexity x) {
    switch (x) {
        case SimComplexity::ClP: return "Cl-P";
        case SimComplexity::SharpPHard: return "#P-hard";
        case SimComplexity::QCHard: return "QC-hard";
        case SimComplexity::PHCollapse: return "PH-collapse evidence";
    }
    return "?";
}

/// Theorem attribution for a table cell, for refusal messages and reports.
inline std::string strong_attribution(const TaskClass& t) {
    if (t.adaptive) return "Theorem 2";
    if (t.product_input && t.many_output) return "Theorem 6";
    if (t.product_input) return "Theorem 1";
    return "Theorem 4";
}

inline std::string weak_attribution(const TaskClass& t) {
    if (!t.product_input) return "Theorem 5";
    if (t.adaptive) return "Theorem 3";
    if (t.many_output) return "Theorem 7";
    return "Theorem 1 with chain-rule sampling";
}

inline std::string class_acronym(const TaskClass& t) {
    std::string s = t.adaptive ? "ADAPT" : "NONADAPT";
    s += t.product_input ? ", IN(PROD)" : ", IN(BITS)";
    s += t.many_output ? ", OUT(MANY)" : ", OUT(1)";
    return s;
}

/// Which efficient engines accept the task (the dense oracle additionally
/// accepts anything within its width cap).
struct EngineSupport {
    bool strong_out1;      // product-input single-line engine
    bool strong_marginal;  // basis-input exact-marginal engine
    bool sampler;          // basis-input adaptive sampler
};

inline EngineSupport engine_support(const TaskClass& t) {
    return EngineSupport{
        !t.adaptive && !t.many_output,
        !t.adaptive && !t.product_input,
        !t.product_input,
    };
}

inline std::string classify_report(const CircuitProgram& c) {
    TaskClass t = classify_task(c);
    std::string s;
    s += "class: " + class_acronym(t) + "\n";
    s += "strong: " + complexity_name(strong_complexity(t)) + " (" + strong_attribution(t) + ")\n";
    s += "weak: " + complexity_name(weak_complexity(t)) + " (" + weak_attribution(t) + ")\n";
    EngineSupport e = engine_support(t);
    s += "engines:";
    if (e.strong_out1) s += " strong-out1";
    if (e.strong_marginal) s += " strong-marginal";
    if (e.sampler) s += " sample";
    if (c.n <= 16) s += " oracle";
    if (!e.strong_out1 && !e.strong_marginal && !e.sampler && c.n > 16) s += " none";
    s += "\n";
    return s;
}

}  // namespace cliffsim
