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
#include <string>
#include <vector>

#include "cliffsim/gf2.hpp"
#include "cliffsim/rewrites.hpp"

namespace cliffsim {

/// Exactly 0 or 2^(-k). The only probabilities a Clifford circuit on a
/// basis input can assign to a basis outcome.
struct DyadicProbability {
    bool is_zero = true;
    unsigned neg_log2 = 0;  // meaningful only when !is_zero

    static DyadicProbability zero() { return {true, 0}; }
    static DyadicProbability pow2(unsigned k) { return {false, k}; }
    static DyadicProbability one() { return {false, 0}; }

    double value() const { return is_zero ? 0.0 : std::ldexp(1.0, -static_cast<int>(neg_log2)); }

    std::string to_string() const {
        if (is_zero) return "0";
        if (neg_log2 == 0) return "1";
        return "2^-" + std::to_string(neg_log2);
    }

    bool operator==(const DyadicProbability& other) const {
        if (is_zero != other.is_zero) return false;
        return is_zero || neg_log2 == other.neg_log2;
    }
};

/// Probability that `output_line` of a non-adaptive Clifford circuit
/// measures y, for a product (or basis) input. Conjugates A = Z on the
/// output line back through the circuit and takes a product of 2x2
/// expectation values: p_y = (1 + (-1)^y (p0 - p1)) / 2.
inline double strong_out1_prod(const CircuitProgram& c, int output_line, bool y) {
    if (!c.is_nonadaptive()) {
        throw CircuitClassError(
            "strong simulation of adaptive circuits is #P-hard (Theorem 2); "
            "use the dense oracle at small width");
    }
    if (!c.is_clifford_only()) {
        throw UnsupportedGateError("circuit contains the non-Clifford S gate");
    }
    if (output_line < 0 || output_line >= c.n) {
        throw DimensionError("output line out of range");
    }
    CircuitProgram u = unitarize(c);
    std::vector<GateInstance> gates = u.gate_list();

    std::vector<SingleQubitState> states;
    if (u.has_basis_input()) {
        const BitString& x = u.basis_input();
        states.reserve(x.size());
        for (size_t i = 0; i < x.size(); i++) states.push_back(x.get(i) ? ket1() : ket0());
    } else {
        states = std::get<std::vector<SingleQubitState>>(u.input);
    }

    PauliOperator a = PauliOperator::single_z(static_cast<size_t>(u.n),
                                              static_cast<size_t>(output_line));
    PauliOperator conj = conjugate_through_circuit(gates, a, ConjugateDirection::Inverse);
    std::complex<double> e = expectation_product_state(conj, states);
    if (std::abs(e.imag()) > 1e-9) {
        throw SimulationError("expectation of a Hermitian Pauli came out non-real");
    }
    double bias = e.real();
    double p = (1.0 + (y ? -bias : bias)) / 2.0;
    if (p < -1e-12 || p > 1.0 + 1e-12) {
        throw SimulationError("probability outside [0,1] beyond tolerance");
    }
    return std::min(1.0, std::max(0.0, p));
}

namespace detail {

/// Core of the marginal computation, on an already standardized circuit
/// (unitary, all-zero input, query = all-zero on lines 0..m-1).
inline DyadicProbability standardized_zero_marginal(const std::vector<GateInstance>& gates,
                                                    size_t width, size_t m) {
    if (m == 0) return DyadicProbability::one();
    // Gamma(e_i) = C' Z_i C for each queried line.
    std::vector<PauliOperator> gamma;
    gamma.reserve(m);
    std::span<const GateInstance> gspan(gates);
    for (size_t i = 0; i < m; i++) {
        gamma.push_back(conjugate_through_circuit(
            gspan, PauliOperator::single_z(width, i), ConjugateDirection::Inverse));
    }
    // A has the X parts a(e_i) as columns; the kernel of A is the set of
    // t with Gamma(t) diagonal.
    BitMatrix A(width, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t r = 0; r < width; r++) {
            if (gamma[i].a.get(r)) A.set(r, i, true);
        }
    }
    std::vector<BitString> basis = kernel_basis(A);
    size_t l = basis.size();
    // The sign of Gamma(c) for each kernel basis vector decides between
    // p = 2^{l-m} and p = 0; u is linear so the basis suffices.
    for (const BitString& cvec : basis) {
        PauliOperator prod = PauliOperator::identity(width);
        for (size_t i = 0; i < m; i++) {
            if (cvec.get(i)) prod = pauli_multiply(prod, gamma[i]);
        }
        if (!prod.a.is_zero()) {
            throw SimulationError("kernel vector did not cancel the X part");
        }
        if (prod.phase_exp & 1) {
            throw SimulationError("diagonal conjugate has phase outside {+1,-1}");
        }
        if (prod.phase_exp == 2) return DyadicProbability::zero();
    }
    return DyadicProbability::pow2(static_cast<unsigned>(m - l));
}

}  // namespace detail

/// Exact marginal probability of reading y on out_lines (in the given
/// order) for a non-adaptive Clifford circuit on basis input x.
inline DyadicProbability strong_bits_marginal(const CircuitProgram& c, const BitString& x,
                                              const std::vector<int>& out_lines,
                                              const BitString& y) {
    if (!c.is_nonadaptive()) {
        throw CircuitClassError(
            "strong simulation of adaptive circuits is #P-hard (Theorem 2); "
            "use the dense oracle at small width");
    }
    if (!c.has_basis_input()) {
        throw CircuitClassError(
            "exact marginals need a basis input; product-input multi-line strong "
            "simulation is #P-hard (Theorem 6)");
    }
    CircuitProgram std_c = standardize_for_theorem4(c, x, y, out_lines);
    return detail::standardized_zero_marginal(std_c.gate_list(),
                                              static_cast<size_t>(std_c.n),
                                              out_lines.size());
}

/// Convenience overload querying the circuit's own input and output lines.
inline DyadicProbability strong_bits_marginal(const CircuitProgram& c, const BitString& y) {
    if (!c.has_basis_input()) {
        throw CircuitClassError(
            "exact marginals need a basis input; product-input multi-line strong "
            "simulation is #P-hard (Theorem 6)");
    }
    return strong_bits_marginal(c, c.basis_input(), c.output_lines, y);
}

}  // namespace cliffsim
