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

#include <cstdint>
#include <string>

#include "cliffsim/errors.hpp"

namespace cliffsim {

/// Gate vocabulary. Naming note: T here is diag(1, i) and IS Clifford;
/// S is diag(1, e^{i pi/4}) and is NOT Clifford. In the more common
/// convention these are called S and T respectively; this library keeps
/// the swapped names consistently (see the README table).
enum class GateKind : uint8_t {
    H,
    T,     // diag(1, i), Clifford
    CZ,
    X,
    Y,
    Z,
    CX,    // first line control, second line target
    SWAP,
    S,     // diag(1, e^{i pi/4}), non-Clifford
};

inline int gate_arity(GateKind k) {
    switch (k) {
        case GateKind::CZ:
        case GateKind::CX:
        case GateKind::SWAP:
            return 2;
        default:
            return 1;
    }
}

inline bool gate_is_clifford(GateKind k) { return k != GateKind::S; }

inline const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::T: return "T";
        case GateKind::CZ: return "CZ";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CX: return "CX";
        case GateKind::SWAP: return "SWAP";
        case GateKind::S: return "S";
    }
    return "?";
}

/// A gate applied to one or two specific (0-based) lines.
struct GateInstance {
    GateKind kind;
    int line0 = 0;
    int line1 = -1;  // -1 for single-qubit gates

    bool operator==(const GateInstance& other) const = default;
};

inline GateInstance gate(GateKind k, int line) {
    if (gate_arity(k) != 1) throw DimensionError("gate needs two lines");
    return GateInstance{k, line, -1};
}

inline GateInstance gate(GateKind k, int line0, int line1) {
    if (gate_arity(k) != 2) throw DimensionError("gate needs one line");
    if (line0 == line1) throw DimensionError("two-qubit gate lines must be distinct");
    return GateInstance{k, line0, line1};
}

inline void check_gate_lines(const GateInstance& g, int width) {
    if (g.line0 < 0 || g.line0 >= width) throw DimensionError("gate line out of range");
    if (gate_arity(g.kind) == 2) {
        if (g.line1 < 0 || g.line1 >= width) throw DimensionError("gate line out of range");
        if (g.line0 == g.line1) throw DimensionError("two-qubit gate lines must be distinct");
    }
}

}  // namespace cliffsim
