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

#include <functional>
#include <numeric>

#include "cliffsim/strong_sim.hpp"

namespace cliffsim {

/// An exact dyadic rational num / 2^den_log2 in [0, 1].
struct ExactProb {
    uint64_t num = 0;
    unsigned den_log2 = 0;

    static ExactProb one() { return {1, 0}; }
    static ExactProb from_dyadic(const DyadicProbability& p) {
        if (p.is_zero) return {0, 0};
        return {1, p.neg_log2};
    }

    ExactProb normalized() const {
        ExactProb r = *this;
        if (r.num == 0) {
            r.den_log2 = 0;
            return r;
        }
        while ((r.num & 1) == 0 && r.den_log2 > 0) {
            r.num >>= 1;
            r.den_log2--;
        }
        return r;
    }

    bool exact_equals(const ExactProb& other) const {
        ExactProb a = normalized(), b = other.normalized();
        return a.num == b.num && a.den_log2 == b.den_log2;
    }

    double value() const { return std::ldexp(static_cast<double>(num), -static_cast<int>(den_log2)); }
};

inline ExactProb exact_add(const ExactProb& a, const ExactProb& b) {
    unsigned d = std::max(a.den_log2, b.den_log2);
    if (d >= 63) throw SimulationError("dyadic denominator exponent too large");
    return ExactProb{(a.num << (d - a.den_log2)) + (b.num << (d - b.den_log2)), d}.normalized();
}

/// Deterministic counter-based bit source: bit = low bit of
/// splitmix64(splitmix64(seed ^ golden*sample_index) ^ counter). Fixed
/// across platforms; one sample index per drawn sample keeps parallel
/// batches independent.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t sample_index)
        : base_(mix(seed ^ (0x9e3779b97f4a7c15ULL * (sample_index + 1)))) {}

    bool next_bit() { return mix(base_ ^ counter_++) & 1; }

    /// j fair bits as an integer in [0, 2^j).
    uint64_t next_bits(unsigned j) {
        uint64_t r = 0;
        for (unsigned i = 0; i < j; i++) r = (r << 1) | (next_bit() ? 1 : 0);
        return r;
    }

  private:
    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t base_;
    uint64_t counter_ = 0;
};

namespace detail {

/// Conditional p(child)/p(parent) as an exact dyadic cn / 2^j.
/// Throws if the ratio is not dyadic (the marginal function is then
/// inconsistent with the chain-rule contract).
struct DyadicConditional {
    uint64_t num;
    unsigned log2_den;
};

inline DyadicConditional exact_conditional(const ExactProb& child, const ExactProb& parent) {
    if (parent.num == 0) {
        throw SimulationError("conditioning on a zero-probability prefix");
    }
    if (child.num == 0) return {0, 0};
    ExactProb c = child.normalized(), p = parent.normalized();
    uint64_t g = std::gcd(c.num, p.num);
    uint64_t cn = c.num / g, pn = p.num / g;
    if (pn != 1) {
        throw SimulationError("conditional probability is not dyadic");
    }
    if (c.den_log2 < p.den_log2) {
        if (cn != 1 || c.den_log2 != p.den_log2) {
            throw SimulationError("conditional probability exceeds 1");
        }
    }
    unsigned j = c.den_log2 - p.den_log2;
    if (cn > (uint64_t{1} << j)) {
        throw SimulationError("conditional probability exceeds 1");
    }
    return {cn, j};
}

}  // namespace detail

/// Chain-rule sampling: draws bit i from p(prefix, 0)/p(prefix). Each
/// conditional is an exact dyadic cn/2^j and costs exactly j fair bits
/// (rejection-free); no floating point is involved.
inline BitString chain_rule_sample(
    const std::function<ExactProb(const std::vector<bool>&)>& marginal_fn,
    size_t num_vars, CounterRng& rng) {
    std::vector<bool> prefix;
    ExactProb p_prefix = marginal_fn(prefix);
    if (!p_prefix.exact_equals(ExactProb::one())) {
        throw SimulationError("marginal of the empty prefix must be 1");
    }
    for (size_t i = 0; i < num_vars; i++) {
        prefix.push_back(false);
        ExactProb p0 = marginal_fn(prefix);
        prefix.back() = true;
        ExactProb p1 = marginal_fn(prefix);
        if (!exact_add(p0, p1).exact_equals(p_prefix)) {
            throw SimulationError("marginal function is inconsistent: p(w0)+p(w1) != p(w)");
        }
        auto cond0 = detail::exact_conditional(p0, p_prefix);
        bool bit = rng.next_bits(cond0.log2_den) >= cond0.num;
        prefix.back() = bit;
        p_prefix = bit ? p1 : p0;
    }
    BitString out(num_vars);
    for (size_t i = 0; i < num_vars; i++) out.set(i, prefix[i]);
    return out;
}

struct SampleOptions {
    /// Also return the K intermediate outcomes (prepended). By default only
    /// the declared output distribution is sampled, matching the task
    /// definition; intermediate outcomes are debug information.
    bool include_intermediate = false;
};

namespace detail {

/// Marginal p(y_1..y_j) of the first j measurement outcomes (intermediate
/// then output) of a deferred adaptive circuit with the given prefix of
/// outcomes substituted into the conditions.
inline ExactProb adaptive_prefix_marginal(const CircuitProgram& deferred,
                                          const BitString& x,
                                          const std::vector<bool>& prefix) {
    std::vector<GateInstance> gates;
    std::vector<int> queried_lines;
    std::map<int, bool> outcomes;
    size_t consumed = 0;
    int k = deferred.measurement_count();
    size_t want_measurements = std::min(prefix.size(), static_cast<size_t>(k));

    for (const Operation& op : deferred.ops) {
        if (const auto* g = std::get_if<GateInstance>(&op)) {
            gates.push_back(*g);
        } else if (const auto* cg = std::get_if<ConditionalGate>(&op)) {
            if (cg->condition.evaluate(outcomes)) gates.push_back(cg->gate);
        } else {
            const auto& m = std::get<Measurement>(op);
            if (consumed == want_measurements) break;
            queried_lines.push_back(m.line);
            outcomes[m.outcome_id] = prefix[consumed];
            consumed++;
        }
    }
    for (size_t j = static_cast<size_t>(k); j < prefix.size(); j++) {
        queried_lines.push_back(deferred.output_lines[j - static_cast<size_t>(k)]);
    }
    BitString y(prefix.size());
    for (size_t i = 0; i < prefix.size(); i++) y.set(i, prefix[i]);

    CircuitProgram prefix_circuit;
    prefix_circuit.n = deferred.n;
    prefix_circuit.input = x;
    prefix_circuit.output_lines = {0};
    for (const GateInstance& g : gates) prefix_circuit.ops.emplace_back(g);
    return ExactProb::from_dyadic(
        strong_bits_marginal(prefix_circuit, x, queried_lines, y));
}

}  // namespace detail

/// One sample of the output distribution of an adaptive Clifford circuit
/// on a basis input: defer measurements, then chain-rule sample outcome
/// by outcome with exact dyadic conditionals. Deterministic given
/// (circuit, input, seed, sample_index).
inline BitString sample_adaptive_bits(const CircuitProgram& c, const BitString& x,
                                      uint64_t seed, uint64_t sample_index = 0,
                                      const SampleOptions& opts = {}) {
    if (!c.has_basis_input() && !c.is_nonadaptive()) {
        throw CircuitClassError(
            "weak simulation with product inputs and adaptation is QC-hard "
            "(Theorem 3); use the dense oracle at small width");
    }
    if (!c.has_basis_input()) {
        throw CircuitClassError(
            "the bit-input sampler does not accept product inputs "
            "(many-output weak simulation with product inputs carries "
            "PH-collapse evidence, Theorem 7); use the dense oracle at small width");
    }
    if (!c.is_clifford_only()) {
        throw UnsupportedGateError("circuit contains the non-Clifford S gate");
    }
    if (static_cast<int>(x.size()) != c.n) throw DimensionError("input length != width");

    CircuitProgram deferred = defer_measurements(c);
    BitString x_ext(static_cast<size_t>(deferred.n));
    for (size_t i = 0; i < x.size(); i++) x_ext.set(i, x.get(i));

    size_t k = static_cast<size_t>(deferred.measurement_count());
    size_t l = deferred.output_lines.size();
    CounterRng rng(seed, sample_index);
    BitString all = chain_rule_sample(
        [&](const std::vector<bool>& prefix) {
            return detail::adaptive_prefix_marginal(deferred, x_ext, prefix);
        },
        k + l, rng);

    if (opts.include_intermediate) return all;
    BitString out(l);
    for (size_t i = 0; i < l; i++) out.set(i, all.get(k + i));
    return out;
}

inline BitString sample_adaptive_bits(const CircuitProgram& c, uint64_t seed,
                                      uint64_t sample_index = 0,
                                      const SampleOptions& opts = {}) {
    if (!c.has_basis_input()) {
        return sample_adaptive_bits(c, BitString(), seed, sample_index, opts);
    }
    return sample_adaptive_bits(c, c.basis_input(), seed, sample_index, opts);
}

/// Controller-driven variant: the controller emits operation blocks as
/// outcomes become known. Each sampled outcome is drawn from the exact
/// conditional of the concrete non-adaptive prefix, as above.
inline BitString sample_adaptive_bits(int n, AdaptiveController& controller,
                                      const std::vector<int>& output_lines,
                                      const BitString& x, uint64_t seed,
                                      uint64_t sample_index = 0,
                                      const SampleOptions& opts = {}) {
    if (static_cast<int>(x.size()) != n) throw DimensionError("input length != width");
    CounterRng rng(seed, sample_index);

    // Concretized history: gates so far, measured lines, outcomes.
    std::vector<GateInstance> gates;
    std::vector<int> measured_lines;
    std::vector<bool> outcome_history;
    std::map<int, bool> outcomes;
    ExactProb p_prefix = ExactProb::one();
    int total_ops = 0;

    // Measurements in controller blocks act on the live line; defer each
    // one manually onto a fresh ancilla so earlier outcomes stay frozen.
    int width = n;
    std::vector<GateInstance> pending;

    auto marginal_with = [&](const std::vector<int>& lines, const std::vector<bool>& bits) {
        CircuitProgram pc;
        pc.n = width;
        BitString x_ext(static_cast<size_t>(width));
        for (size_t i = 0; i < x.size(); i++) x_ext.set(i, x.get(i));
        pc.input = x_ext;
        pc.output_lines = {0};
        for (const GateInstance& g : gates) pc.ops.emplace_back(g);
        BitString y(bits.size());
        for (size_t i = 0; i < bits.size(); i++) y.set(i, bits[i]);
        return ExactProb::from_dyadic(strong_bits_marginal(pc, x_ext, lines, y));
    };

    auto draw_line = [&](int line) {
        std::vector<bool> bits = outcome_history;
        bits.push_back(false);
        std::vector<int> lines = measured_lines;
        lines.push_back(line);
        ExactProb p0 = marginal_with(lines, bits);
        bits.back() = true;
        ExactProb p1 = marginal_with(lines, bits);
        if (!exact_add(p0, p1).exact_equals(p_prefix)) {
            throw SimulationError("controller prefix marginals are inconsistent");
        }
        auto cond0 = detail::exact_conditional(p0, p_prefix);
        bool bit = rng.next_bits(cond0.log2_den) >= cond0.num;
        measured_lines = std::move(lines);
        outcome_history.push_back(bit);
        p_prefix = bit ? p1 : p0;
        return bit;
    };

    while (true) {
        std::vector<Operation> block = controller.next_block(outcome_history);
        if (block.empty()) break;
        total_ops += static_cast<int>(block.size());
        if (total_ops > controller.max_operations()) {
            throw SimulationError("controller exceeded its declared operation bound");
        }
        for (const Operation& op : block) {
            if (const auto* g = std::get_if<GateInstance>(&op)) {
                if (!gate_is_clifford(g->kind)) {
                    throw UnsupportedGateError("controller emitted a non-Clifford gate");
                }
                check_gate_lines(*g, n);
                gates.push_back(*g);
            } else if (const auto* cg = std::get_if<ConditionalGate>(&op)) {
                if (!gate_is_clifford(cg->gate.kind)) {
                    throw UnsupportedGateError("controller emitted a non-Clifford gate");
                }
                check_gate_lines(cg->gate, n);
                if (cg->condition.evaluate(outcomes)) gates.push_back(cg->gate);
            } else {
                const auto& m = std::get<Measurement>(op);
                if (m.line < 0 || m.line >= n) throw DimensionError("measured line out of range");
                int ancilla = width++;
                gates.push_back(GateInstance{GateKind::CX, m.line, ancilla});
                bool bit = draw_line(ancilla);
                outcomes[m.outcome_id] = bit;
            }
        }
    }

    // Sample the declared output lines off the final concrete circuit.
    size_t k = outcome_history.size();
    for (int line : output_lines) {
        if (line < 0 || line >= n) throw DimensionError("output line out of range");
        draw_line(line);
    }
    size_t l = output_lines.size();
    if (opts.include_intermediate) {
        BitString all(k + l);
        for (size_t i = 0; i < k + l; i++) all.set(i, outcome_history[i]);
        return all;
    }
    BitString out(l);
    for (size_t i = 0; i < l; i++) out.set(i, outcome_history[k + i]);
    return out;
}

}  // namespace cliffsim
