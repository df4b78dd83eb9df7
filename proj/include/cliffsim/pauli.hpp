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

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "cliffsim/bitstring.hpp"
#include "cliffsim/gates.hpp"

namespace cliffsim {

/// An n-qubit Pauli operator i^phase_exp * X(a) * Z(b).
///
/// The decomposition is unique, so label equality is operator equality.
/// The prefactor set {+1, +i, -1, -i} is encoded as an exponent of i
/// mod 4 (one of several possible encodings of the four phases; this
/// library fixes this one throughout).
struct PauliOperator {
    size_t n = 0;
    uint8_t phase_exp = 0;  // in {0,1,2,3}
    BitString a;            // X part
    BitString b;            // Z part

    PauliOperator() = default;

    explicit PauliOperator(size_t n_) : n(n_), a(n_), b(n_) {}

    PauliOperator(size_t n_, uint8_t phase, BitString a_, BitString b_)
        : n(n_), phase_exp(phase & 3), a(std::move(a_)), b(std::move(b_)) {
        if (a.size() != n || b.size() != n) {
            throw DimensionError("pauli label bitstrings must have length n");
        }
    }

    static PauliOperator identity(size_t n) { return PauliOperator(n); }

    /// Z on one line, identity elsewhere.
    static PauliOperator single_z(size_t n, size_t line) {
        PauliOperator p(n);
        p.b.set(line, true);
        return p;
    }

    static PauliOperator single_x(size_t n, size_t line) {
        PauliOperator p(n);
        p.a.set(line, true);
        return p;
    }

    std::complex<double> phase() const {
        static const std::complex<double> table[4] = {
            {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[phase_exp];
    }

    bool is_identity_label() const {
        return phase_exp == 0 && a.is_zero() && b.is_zero();
    }

    /// P^2 = i^{2 phase_exp + 2 (a.b)} I, so P is an involution (equivalently
    /// Hermitian) iff phase_exp + a.b is even.
    bool squares_to_identity() const {
        return ((phase_exp + (a.dot(b) ? 1 : 0)) & 1) == 0;
    }

    PauliOperator inverse() const {
        // P^{-1} = i^{-phase} Z(b)^{-1} X(a)^{-1} = i^{-phase} (-1)^{a.b} X(a)Z(b)
        uint8_t ph = static_cast<uint8_t>((4 - phase_exp + 2 * (a.dot(b) ? 1 : 0)) & 3);
        return PauliOperator(n, ph, a, b);
    }

    bool operator==(const PauliOperator& other) const = default;
};

/// Label of the product p*q: moving Z(p.b) past X(q.a) costs (-1)^{p.b . q.a}.
inline PauliOperator pauli_multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) throw DimensionError("pauli operands have different qubit counts");
    uint8_t ph = static_cast<uint8_t>(
        (p.phase_exp + q.phase_exp + 2 * (p.b.dot(q.a) ? 1 : 0)) & 3);
    return PauliOperator(p.n, ph, p.a ^ q.a, p.b ^ q.b);
}

/// P|x> = i^scalar (-1)^sign_exp |y>, with y = x + a, sign_exp = b.x.
struct BasisAction {
    uint8_t scalar;   // power of i
    uint8_t sign_exp; // 0 or 1
    BitString y;

    std::complex<double> coefficient() const {
        static const std::complex<double> table[4] = {
            {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[(scalar + 2 * sign_exp) & 3];
    }
};

inline BasisAction pauli_apply_basis(const PauliOperator& p, const BitString& x) {
    if (x.size() != p.n) throw DimensionError("basis state length mismatch");
    return BasisAction{p.phase_exp, static_cast<uint8_t>(p.b.dot(x) ? 1 : 0), x ^ p.a};
}

/// In-place label update for conjugation by one Clifford gate: p <- g p g'.
/// Only phase_exp and the entries on g's line(s) change.
inline void conjugate_by_gate_inplace(PauliOperator& p, const GateInstance& g) {
    check_gate_lines(g, static_cast<int>(p.n));
    size_t i = static_cast<size_t>(g.line0);
    size_t j = static_cast<size_t>(g.line1 >= 0 ? g.line1 : 0);
    switch (g.kind) {
        case GateKind::H: {
            bool ai = p.a.get(i), bi = p.b.get(i);
            if (ai && bi) p.phase_exp = (p.phase_exp + 2) & 3;
            p.a.set(i, bi);
            p.b.set(i, ai);
            break;
        }
        case GateKind::T:
            // T X T' = i X Z
            if (p.a.get(i)) {
                p.phase_exp = (p.phase_exp + 1) & 3;
                p.b.flip(i);
            }
            break;
        case GateKind::CZ:
            if (p.a.get(i) && p.a.get(j)) p.phase_exp = (p.phase_exp + 2) & 3;
            if (p.a.get(j)) p.b.flip(i);
            if (p.a.get(i)) p.b.flip(j);
            break;
        case GateKind::X:
            if (p.b.get(i)) p.phase_exp = (p.phase_exp + 2) & 3;
            break;
        case GateKind::Y:
            if (p.a.get(i) != p.b.get(i)) p.phase_exp = (p.phase_exp + 2) & 3;
            break;
        case GateKind::Z:
            if (p.a.get(i)) p.phase_exp = (p.phase_exp + 2) & 3;
            break;
        case GateKind::CX: {
            // control i, target j: X_i -> X_i X_j, Z_j -> Z_i Z_j; no phase
            if (p.a.get(i)) p.a.flip(j);
            if (p.b.get(j)) p.b.flip(i);
            break;
        }
        case GateKind::SWAP: {
            bool ai = p.a.get(i), bi = p.b.get(i);
            p.a.set(i, p.a.get(j));
            p.b.set(i, p.b.get(j));
            p.a.set(j, ai);
            p.b.set(j, bi);
            break;
        }
        case GateKind::S:
            throw UnsupportedGateError(
                "S = diag(1, e^{i pi/4}) is not Clifford; Pauli conjugation undefined");
    }
}

/// p <- g' p g. Every supported gate except T is self-inverse.
inline void conjugate_by_gate_inverse_inplace(PauliOperator& p, const GateInstance& g) {
    if (g.kind == GateKind::T) {
        check_gate_lines(g, static_cast<int>(p.n));
        size_t i = static_cast<size_t>(g.line0);
        // T' X T = -i X Z
        if (p.a.get(i)) {
            p.phase_exp = (p.phase_exp + 3) & 3;
            p.b.flip(i);
        }
        return;
    }
    conjugate_by_gate_inplace(p, g);
}

inline PauliOperator conjugate_by_gate(const PauliOperator& p, const GateInstance& g) {
    PauliOperator r = p;
    conjugate_by_gate_inplace(r, g);
    return r;
}

enum class ConjugateDirection {
    Forward,  // C p C'
    Inverse,  // C' p C
};

/// Conjugate p through a unitary Clifford gate list (whole-circuit unitary
/// C = g_{N-1} ... g_1 g_0, i.e. list order is application order).
inline PauliOperator conjugate_through_circuit(std::span<const GateInstance> gates,
                                               const PauliOperator& p,
                                               ConjugateDirection direction) {
    PauliOperator r = p;
    if (direction == ConjugateDirection::Forward) {
        for (const GateInstance& g : gates) {
            conjugate_by_gate_inplace(r, g);
        }
    } else {
        for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
            conjugate_by_gate_inverse_inplace(r, *it);
        }
    }
    return r;
}

/// One qubit's amplitudes (|0> coefficient, |1> coefficient).
struct SingleQubitState {
    std::complex<double> amp0;
    std::complex<double> amp1;

    double norm_sq() const { return std::norm(amp0) + std::norm(amp1); }

    bool operator==(const SingleQubitState& other) const = default;
};

inline SingleQubitState ket0() { return {{1, 0}, {0, 0}}; }
inline SingleQubitState ket1() { return {{0, 0}, {1, 0}}; }
inline SingleQubitState ket_plus() {
    double s = 1.0 / std::numbers::sqrt2;
    return {{s, 0}, {s, 0}};
}
inline SingleQubitState ket_minus() {
    double s = 1.0 / std::numbers::sqrt2;
    return {{s, 0}, {-s, 0}};
}
/// (|0> + e^{i pi/4} |1>) / sqrt 2, the ancilla state of the S-gate gadget.
inline SingleQubitState ket_pi4() {
    double s = 1.0 / std::numbers::sqrt2;
    return {{s, 0}, std::polar(s, std::numbers::pi / 4)};
}

/// <alpha| X^x Z^z |alpha> for a single qubit.
inline std::complex<double> single_qubit_xz_expectation(const SingleQubitState& st,
                                                        bool x, bool z) {
    // (X^x Z^z) applied to (amp0, amp1)
    std::complex<double> v0 = st.amp0;
    std::complex<double> v1 = z ? -st.amp1 : st.amp1;
    if (x) std::swap(v0, v1);
    return std::conj(st.amp0) * v0 + std::conj(st.amp1) * v1;
}

/// gamma * prod_i <alpha_i| X^{a_i} Z^{b_i} |alpha_i>.
inline std::complex<double> expectation_product_state(
    const PauliOperator& p, std::span<const SingleQubitState> states,
    double norm_tolerance = 1e-12) {
    if (states.size() != p.n) {
        throw DimensionError("need exactly one state per qubit");
    }
    std::complex<double> acc = p.phase();
    for (size_t i = 0; i < p.n; i++) {
        if (std::abs(states[i].norm_sq() - 1.0) > norm_tolerance) {
            throw DimensionError("product-state factor is not normalized");
        }
        acc *= single_qubit_xz_expectation(states[i], p.a.get(i), p.b.get(i));
        if (acc == std::complex<double>{0, 0}) break;
    }
    return acc;
}

}  // namespace cliffsim
