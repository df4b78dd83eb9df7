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

// Brute-force state-vector reference simulator. Not a performance artifact:
// width is capped at 16 and adaptive circuits are expanded exhaustively
// over measurement outcomes so that reference distributions are exact.

#include <complex>
#include <map>
#include <numbers>
#include <vector>

#include "cliffsim/circuit.hpp"

namespace cliffsim {

class StateVector {
  public:
    static constexpr int kMaxQubits = 16;

    explicit StateVector(int n) : n_(n) {
        check_width(n);
        amps_.assign(size_t{1} << n, {0, 0});
        amps_[0] = {1, 0};
    }

    static StateVector from_basis(const BitString& x) {
        StateVector v(static_cast<int>(x.size()));
        v.amps_[0] = {0, 0};
        size_t idx = 0;
        for (size_t i = 0; i < x.size(); i++) {
            if (x.get(i)) idx |= size_t{1} << i;
        }
        v.amps_[idx] = {1, 0};
        return v;
    }

    static StateVector from_product(const std::vector<SingleQubitState>& states) {
        StateVector v(static_cast<int>(states.size()));
        for (size_t idx = 0; idx < v.amps_.size(); idx++) {
            std::complex<double> amp = {1, 0};
            for (size_t i = 0; i < states.size(); i++) {
                amp *= ((idx >> i) & 1) ? states[i].amp1 : states[i].amp0;
            }
            v.amps_[idx] = amp;
        }
        return v;
    }

    static StateVector from_input(int n, const InputSpec& input) {
        if (const auto* bits = std::get_if<BitString>(&input)) {
            if (static_cast<int>(bits->size()) != n) throw DimensionError("input width mismatch");
            return from_basis(*bits);
        }
        const auto& states = std::get<std::vector<SingleQubitState>>(input);
        if (static_cast<int>(states.size()) != n) throw DimensionError("input width mismatch");
        return from_product(states);
    }

    int qubits() const { return n_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::vector<std::complex<double>>& amplitudes() { return amps_; }

    double norm_sq() const {
        double s = 0;
        for (const auto& a : amps_) s += std::norm(a);
        return s;
    }

    void apply_gate(const GateInstance& g, bool inverse = false) {
        check_gate_lines(g, n_);
        size_t bit0 = size_t{1} << g.line0;
        const std::complex<double> i_unit{0, 1};
        switch (g.kind) {
            case GateKind::H: {
                double s = 1.0 / std::numbers::sqrt2;
                for_pairs(bit0, [&](std::complex<double>& a0, std::complex<double>& a1) {
                    std::complex<double> t0 = s * (a0 + a1), t1 = s * (a0 - a1);
                    a0 = t0;
                    a1 = t1;
                });
                break;
            }
            case GateKind::T: {
                std::complex<double> ph = inverse ? -i_unit : i_unit;
                scale_ones(bit0, ph);
                break;
            }
            case GateKind::S: {
                std::complex<double> ph = std::polar(1.0, (inverse ? -1 : 1) * std::numbers::pi / 4);
                scale_ones(bit0, ph);
                break;
            }
            case GateKind::X:
                for_pairs(bit0, [](std::complex<double>& a0, std::complex<double>& a1) {
                    std::swap(a0, a1);
                });
                break;
            case GateKind::Y:
                for_pairs(bit0, [&](std::complex<double>& a0, std::complex<double>& a1) {
                    std::complex<double> t0 = -i_unit * a1, t1 = i_unit * a0;
                    a0 = t0;
                    a1 = t1;
                });
                break;
            case GateKind::Z:
                scale_ones(bit0, {-1, 0});
                break;
            case GateKind::CZ: {
                size_t bit1 = size_t{1} << g.line1;
                for (size_t idx = 0; idx < amps_.size(); idx++) {
                    if ((idx & bit0) && (idx & bit1)) amps_[idx] = -amps_[idx];
                }
                break;
            }
            case GateKind::CX: {
                size_t bit1 = size_t{1} << g.line1;  // target
                for (size_t idx = 0; idx < amps_.size(); idx++) {
                    if ((idx & bit0) && !(idx & bit1)) {
                        std::swap(amps_[idx], amps_[idx | bit1]);
                    }
                }
                break;
            }
            case GateKind::SWAP: {
                size_t bit1 = size_t{1} << g.line1;
                for (size_t idx = 0; idx < amps_.size(); idx++) {
                    bool b0 = idx & bit0, b1 = idx & bit1;
                    if (b0 && !b1) std::swap(amps_[idx], amps_[(idx ^ bit0) | bit1]);
                }
                break;
            }
        }
    }

    /// Probability of reading 1 on a line.
    double prob_one(int line) const {
        size_t bit = size_t{1} << line;
        double p = 0;
        for (size_t idx = 0; idx < amps_.size(); idx++) {
            if (idx & bit) p += std::norm(amps_[idx]);
        }
        return p;
    }

    /// Non-destructive measurement collapse: zero the other branch and
    /// renormalize; the line keeps |outcome>.
    void collapse(int line, bool outcome, double prob) {
        size_t bit = size_t{1} << line;
        double scale = 1.0 / std::sqrt(prob);
        for (size_t idx = 0; idx < amps_.size(); idx++) {
            if (((idx & bit) != 0) == outcome) {
                amps_[idx] *= scale;
            } else {
                amps_[idx] = {0, 0};
            }
        }
    }

  private:
    static void check_width(int n) {
        if (n <= 0 || n > kMaxQubits) {
            throw DimensionError("dense oracle width cap is 16 qubits");
        }
    }

    template <typename F>
    void for_pairs(size_t bit, F&& f) {
        for (size_t idx = 0; idx < amps_.size(); idx++) {
            if (!(idx & bit)) f(amps_[idx], amps_[idx | bit]);
        }
    }

    void scale_ones(size_t bit, std::complex<double> ph) {
        for (size_t idx = 0; idx < amps_.size(); idx++) {
            if (idx & bit) amps_[idx] *= ph;
        }
    }

    int n_;
    std::vector<std::complex<double>> amps_;
};

/// Build the dense operator from a Pauli label and apply it.
inline StateVector apply_pauli_dense(const PauliOperator& p, const StateVector& v) {
    if (static_cast<int>(p.n) != v.qubits()) throw DimensionError("pauli width mismatch");
    StateVector out = v;
    auto& amps = out.amplitudes();
    const auto& in = v.amplitudes();
    size_t a_mask = 0, b_mask = 0;
    for (size_t i = 0; i < p.n; i++) {
        if (p.a.get(i)) a_mask |= size_t{1} << i;
        if (p.b.get(i)) b_mask |= size_t{1} << i;
    }
    std::complex<double> gamma = p.phase();
    for (size_t idx = 0; idx < in.size(); idx++) {
        // P |idx> = gamma (-1)^{b.idx} |idx ^ a>
        int sign = std::popcount(idx & b_mask) & 1;
        amps[idx ^ a_mask] = (sign ? -gamma : gamma) * in[idx];
    }
    return out;
}

/// Joint distribution over the circuit's output lines, keyed by the packed
/// outcome (bit j of the key = value on output_lines[j]). Adaptive circuits
/// are expanded exhaustively over measurement outcomes; zero-probability
/// branches are pruned and the total branch count is capped at 2^12.
inline std::map<uint64_t, double> run_distribution(const CircuitProgram& c) {
    c.validate();
    static constexpr size_t kBranchCap = size_t{1} << 12;
    std::map<uint64_t, double> dist;
    size_t leaves = 0;

    struct Frame {
        StateVector state;
        std::map<int, bool> outcomes;
        double prob;
        size_t op_index;
    };

    std::vector<Frame> stack;
    stack.push_back({StateVector::from_input(c.n, c.input), {}, 1.0, 0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        bool dead = false;
        while (f.op_index < c.ops.size()) {
            const Operation& op = c.ops[f.op_index];
            if (const auto* g = std::get_if<GateInstance>(&op)) {
                f.state.apply_gate(*g);
                f.op_index++;
            } else if (const auto* cg = std::get_if<ConditionalGate>(&op)) {
                if (cg->condition.evaluate(f.outcomes)) f.state.apply_gate(cg->gate);
                f.op_index++;
            } else {
                const auto& m = std::get<Measurement>(op);
                double p1 = f.state.prob_one(m.line);
                f.op_index++;
                if (p1 > 1e-12 && p1 < 1.0 - 1e-12) {
                    if (++leaves > kBranchCap) {
                        throw CircuitClassError("oracle outcome-tree branch cap (2^12) exceeded");
                    }
                    Frame other = f;
                    other.state.collapse(m.line, true, p1);
                    other.outcomes[m.outcome_id] = true;
                    other.prob *= p1;
                    stack.push_back(std::move(other));
                    f.state.collapse(m.line, false, 1.0 - p1);
                    f.outcomes[m.outcome_id] = false;
                    f.prob *= 1.0 - p1;
                } else {
                    bool outcome = p1 >= 0.5;
                    double p = outcome ? p1 : 1.0 - p1;
                    if (p <= 1e-12) {
                        dead = true;
                        break;
                    }
                    f.state.collapse(m.line, outcome, p);
                    f.outcomes[m.outcome_id] = outcome;
                    f.prob *= p;
                }
            }
        }
        if (dead) continue;
        // Accumulate the joint over the output lines for this branch.
        const auto& amps = f.state.amplitudes();
        for (size_t idx = 0; idx < amps.size(); idx++) {
            double w = std::norm(amps[idx]);
            if (w == 0) continue;
            uint64_t key = 0;
            for (size_t j = 0; j < c.output_lines.size(); j++) {
                if ((idx >> c.output_lines[j]) & 1) key |= uint64_t{1} << j;
            }
            dist[key] += f.prob * w;
        }
    }
    return dist;
}

/// Conditional probability of target_line == target_value given the
/// postselected line values, as a quotient of two marginals.
inline double run_postselected(const CircuitProgram& c,
                               const std::map<int, bool>& postselect, int target_line,
                               bool target_value = true) {
    CircuitProgram q = c;
    q.output_lines.clear();
    for (const auto& [line, bit] : postselect) q.output_lines.push_back(line);
    q.output_lines.push_back(target_line);
    std::sort(q.output_lines.begin(), q.output_lines.end());
    q.output_lines.erase(std::unique(q.output_lines.begin(), q.output_lines.end()),
                         q.output_lines.end());

    std::map<uint64_t, double> dist = run_distribution(q);
    double p_event = 0, p_joint = 0;
    for (const auto& [key, p] : dist) {
        bool match = true;
        for (const auto& [line, bit] : postselect) {
            size_t j = static_cast<size_t>(
                std::lower_bound(q.output_lines.begin(), q.output_lines.end(), line) -
                q.output_lines.begin());
            if ((((key >> j) & 1) != 0) != bit) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        p_event += p;
        size_t jt = static_cast<size_t>(
            std::lower_bound(q.output_lines.begin(), q.output_lines.end(), target_line) -
            q.output_lines.begin());
        if ((((key >> jt) & 1) != 0) == target_value) p_joint += p;
    }
    if (p_event <= 1e-12) {
        throw SimulationError("postselected event has probability zero");
    }
    return p_joint / p_event;
}

}  // namespace cliffsim
