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

#include <stdexcept>
#include <string>

namespace cliffsim {

/// Mismatched qubit counts, line indices out of range, malformed shapes.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A non-Clifford gate reached an engine that only handles Clifford gates.
struct UnsupportedGateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested task belongs to a class the engine refuses (hardness result).
/// The message names the relevant theorem.
struct CircuitClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Circuit text / DIMACS syntax error. Carries a 1-based line number.
struct ParseError : std::runtime_error {
    int line_number;
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_number(line) {}
};

/// An internal invariant failed (e.g. a phase that the theory forbids).
struct SimulationError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cliffsim
