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

// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Tolerances and workloads are fixed; do not loosen them.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "test_support.hpp"

using namespace cliffsim;
using namespace cliffsim::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& name, bool pass, double secs,
            const std::string& detail = "") {
    std::printf("criterion %d (%s): %s  [%.2f s]%s%s\n", criterion, name.c_str(),
                pass ? "PASS" : "FAIL", secs, detail.empty() ? "" : " - ",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) failures++;
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xC1);
    double worst = 0;
    int circuits = 0;
    for (int trial = 0; trial < 500; trial++) {
        int n = 2 + static_cast<int>(rng() % 7);  // 2..8
        int gates = 10 + static_cast<int>(rng() % 51);  // 10..60
        auto gate_seq = random_clifford_gates(n, gates, rng);
        auto states = random_product_input(n, rng);

        StateVector v = StateVector::from_product(states);
        apply_circuit_dense(v, gate_seq);

        CircuitProgram c;
        c.n = n;
        c.input = states;
        for (const GateInstance& g : gate_seq) c.ops.emplace_back(g);
        for (int i = 0; i < n; i++) c.output_lines.push_back(i);

        for (int pick = 0; pick < 2; pick++) {
            int line = static_cast<int>(rng() % n);
            double p1_oracle = v.prob_one(line);
            worst = std::max(worst, std::abs(strong_out1_prod(c, line, true) - p1_oracle));
            worst = std::max(worst,
                             std::abs(strong_out1_prod(c, line, false) - (1.0 - p1_oracle)));
        }
        circuits++;
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << circuits << " circuits, max |dev| = " << worst;
    report(1, "Theorem 1 vs oracle", worst <= 1e-9 && secs < 60.0 && circuits >= 500,
           secs, d.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xC2);
    double worst = 0;
    bool all_dyadic = true, all_sum_one = true;
    int circuits = 0;
    long marginals = 0;
    for (int trial = 0; trial < 500; trial++) {
        int n = 2 + static_cast<int>(rng() % 5);  // 2..6 (subset sweep is 3^n)
        if (trial % 50 == 0) n = 7 + static_cast<int>(rng() % 2);  // a few at 7..8
        RandomCircuitOptions opts;
        opts.measurements = 1 + static_cast<int>(rng() % 3);
        CircuitProgram c = random_nonadaptive_circuit(n, 30, opts, rng);
        auto dist = run_distribution(c);  // key bit i = line i

        // full marginals: exact dyadic sum must be exactly 1
        ExactProb total{0, 0};
        std::vector<int> all_lines(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) all_lines[static_cast<size_t>(i)] = i;
        for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
            BitString y(static_cast<size_t>(n));
            for (int i = 0; i < n; i++) y.set(static_cast<size_t>(i), (v >> i) & 1);
            DyadicProbability p = strong_bits_marginal(c, c.basis_input(), all_lines, y);
            if (!p.is_zero) total = exact_add(total, ExactProb{1, p.neg_log2});
        }
        if (total.num != 1 || total.den_log2 != 0) all_sum_one = false;

        // every subset of the output lines, every outcome
        int subset_cap = (n <= 6) ? (1 << n) : 64;  // at n=7..8 sample 64 subsets
        for (int s = 0; s < subset_cap; s++) {
            uint64_t mask = (n <= 6) ? static_cast<uint64_t>(s)
                                     : (rng() & ((uint64_t{1} << n) - 1));
            std::vector<int> lines;
            std::vector<size_t> slots;
            for (int i = 0; i < n; i++) {
                if ((mask >> i) & 1) {
                    lines.push_back(i);
                    slots.push_back(static_cast<size_t>(i));
                }
            }
            if (lines.empty()) continue;
            auto marg = project_distribution(dist, slots);
            size_t m = lines.size();
            for (uint64_t v = 0; v < (uint64_t{1} << m); v++) {
                BitString y(m);
                for (size_t j = 0; j < m; j++) y.set(j, (v >> j) & 1);
                DyadicProbability p = strong_bits_marginal(c, c.basis_input(), lines, y);
                double expect = marg.count(v) ? marg.at(v) : 0.0;
                worst = std::max(worst, std::abs(p.value() - expect));
                // the value is 0 or 2^-k by type; cross-check the encoding
                if (!p.is_zero && p.value() != std::ldexp(1.0, -static_cast<int>(p.neg_log2))) {
                    all_dyadic = false;
                }
                marginals++;
            }
        }
        circuits++;
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << circuits << " circuits, " << marginals << " marginals, max |dev| = " << worst;
    report(2, "Theorem 4 vs oracle",
           worst <= 1e-12 && all_dyadic && all_sum_one && secs < 120.0 && circuits >= 500,
           secs, d.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion3() {
    auto t0 = Clock::now();
    const std::array<const char*, 3> circuits = {
        // uniform bits
        "qubits 3\nH 1\nH 2\nH 3\nout 1 2 3\n",
        // adaptive Toffoli gadget on two coins
        "qubits 3\nH 1\nH 2\nM 1 -> m0\nCOND m0 : CX 2 3\nout 1 2 3\n",
        // mixed conditional with a parity condition
        "qubits 4\nH 1\nCX 1 2\nH 3\nM 1 -> m0\nM 3 -> m1\n"
        "COND m0^m1 : X 4\nCOND m0^m1^1 : Z 2\nH 3\nout 2 3 4\n",
    };
    const int shots = 100000;
    double worst_tv = 0;
    for (size_t ci = 0; ci < circuits.size(); ci++) {
        CircuitProgram c = parse_circuit(circuits[ci]);
        auto exact = run_distribution(c);
        std::map<uint64_t, double> freq;
        for (int s = 0; s < shots; s++) {
            BitString out =
                sample_adaptive_bits(c, 0xACCE97 + ci, static_cast<uint64_t>(s));
            uint64_t key = 0;
            for (size_t j = 0; j < out.size(); j++) {
                if (out.get(j)) key |= uint64_t{1} << j;
            }
            freq[key] += 1.0 / shots;
        }
        worst_tv = std::max(worst_tv, total_variation(exact, freq));
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << "3 circuits x " << shots << " samples, max TV = " << worst_tv;
    report(3, "Theorem 5 sampler", worst_tv <= 0.01 && secs < 60.0, secs, d.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xC4);
    bool ok = true;
    std::string why;

    // Lemma 4: both measurement branches, 50 random states
    double worst_fid = 1.0;
    for (int trial = 0; trial < 50; trial++) {
        SingleQubitState psi = random_state(rng);
        StateVector v = StateVector::from_product({psi, ket_pi4()});
        v.apply_gate(gate(GateKind::CX, 0, 1));
        double p1 = v.prob_one(1);
        StateVector b0 = v;
        b0.collapse(1, false, 1.0 - p1);
        StateVector e0 = StateVector::from_product({psi, ket0()});
        e0.apply_gate(gate(GateKind::S, 0));
        worst_fid = std::min(worst_fid, fidelity(b0, e0));
        StateVector b1 = v;
        b1.collapse(1, true, p1);
        StateVector e1 = StateVector::from_product({psi, ket1()});
        e1.apply_gate(gate(GateKind::S, 0), true);
        worst_fid = std::min(worst_fid, fidelity(b1, e1));
    }
    if (worst_fid < 1.0 - 1e-9) {
        ok = false;
        why += "lemma-4 fidelity " + std::to_string(worst_fid) + "; ";
    }

    // Theorem 6 quotient identity and adaptive-mode equivalence, K <= 3
    double worst_post = 0, worst_adapt = 0;
    for (int trial = 0; trial < 40; trial++) {
        int n = 2 + static_cast<int>(rng() % 3);
        CircuitProgram c = random_nonadaptive_circuit(n, 15, {}, rng);
        int k = 1 + static_cast<int>(rng() % 3);
        for (int s = 0; s < k; s++) {
            size_t pos = rng() % (c.ops.size() + 1);
            c.ops.insert(c.ops.begin() + static_cast<long>(pos),
                         Operation{gate(GateKind::S, static_cast<int>(rng() % n))});
        }
        auto base = run_distribution(c);

        GadgetRewriteReport ad = s_gadget_rewrite(c, GadgetMode::Adaptive);
        worst_adapt =
            std::max(worst_adapt, max_dist_deviation(base, run_distribution(ad.rewritten)));

        GadgetRewriteReport ps = s_gadget_rewrite(c, GadgetMode::Postselect);
        auto full = run_distribution(ps.rewritten);
        const auto& outs = ps.rewritten.output_lines;
        std::map<uint64_t, double> cond;
        double p_event = 0;
        for (const auto& [key, p] : full) {
            bool zero_anc = true;
            for (int anc : ps.ancilla_lines) {
                size_t j = static_cast<size_t>(
                    std::lower_bound(outs.begin(), outs.end(), anc) - outs.begin());
                if ((key >> j) & 1) zero_anc = false;
            }
            if (!zero_anc) continue;
            p_event += p;
            uint64_t orig = 0;
            for (size_t j = 0; j < c.output_lines.size(); j++) {
                size_t slot = static_cast<size_t>(
                    std::lower_bound(outs.begin(), outs.end(), c.output_lines[j]) -
                    outs.begin());
                if ((key >> slot) & 1) orig |= uint64_t{1} << j;
            }
            cond[orig] += p;
        }
        for (auto& [kk, p] : cond) p /= p_event;
        worst_post = std::max(worst_post, max_dist_deviation(base, cond));
    }
    if (worst_post > 1e-9) {
        ok = false;
        why += "postselect dev " + std::to_string(worst_post) + "; ";
    }
    if (worst_adapt > 1e-9) {
        ok = false;
        why += "adaptive dev " + std::to_string(worst_adapt) + "; ";
    }
    std::ostringstream d;
    d << "min fidelity = " << worst_fid << ", postselect dev = " << worst_post
      << ", adaptive dev = " << worst_adapt;
    report(4, "gadget identities", ok, seconds_since(t0), ok ? d.str() : why);
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
    auto t0 = Clock::now();
    double worst = 0;
    long formulas = 0;

    auto check_formula = [&](const CnfFormula& f) {
        double expect =
            static_cast<double>(count_sat_bruteforce(f)) / std::ldexp(1.0, f.num_vars);
        CircuitProgram c = sharp_sat_circuit(f);
        auto dist = run_distribution(c);
        double got = dist.count(1) ? dist.at(1) : 0.0;
        worst = std::max(worst, std::abs(got - expect));
        formulas++;
    };

    // exhaustive family: n <= 3 variables, every distinct clause over them,
    // every formula of up to 3 distinct clauses (sorted combinations)
    for (int n = 1; n <= 3; n++) {
        std::vector<std::vector<int>> clauses;
        for (uint32_t vars = 1; vars < (1u << n); vars++) {
            std::vector<int> base;
            for (int v = 0; v < n; v++) {
                if ((vars >> v) & 1) base.push_back(v + 1);
            }
            if (base.size() > 3) continue;
            for (uint32_t signs = 0; signs < (1u << base.size()); signs++) {
                std::vector<int> cl = base;
                for (size_t i = 0; i < cl.size(); i++) {
                    if ((signs >> i) & 1) cl[i] = -cl[i];
                }
                clauses.push_back(cl);
            }
        }
        size_t m = clauses.size();
        check_formula(CnfFormula{n, {}});
        for (size_t i = 0; i < m; i++) {
            check_formula(CnfFormula{n, {clauses[i]}});
            for (size_t j = i + 1; j < m; j++) {
                check_formula(CnfFormula{n, {clauses[i], clauses[j]}});
                for (size_t k = j + 1; k < m; k++) {
                    check_formula(CnfFormula{n, {clauses[i], clauses[j], clauses[k]}});
                }
            }
        }
    }

    // 50 random n=4 instances
    std::mt19937_64 rng(0xC5);
    for (int trial = 0; trial < 50; trial++) {
        CnfFormula f;
        f.num_vars = 4;
        int k = 1 + static_cast<int>(rng() % 3);
        for (int c = 0; c < k; c++) {
            int width = 1 + static_cast<int>(rng() % 3);
            std::vector<int> vars = {1, 2, 3, 4};
            std::shuffle(vars.begin(), vars.end(), rng);
            std::vector<int> cl;
            for (int i = 0; i < width; i++) {
                cl.push_back((rng() & 1) ? vars[static_cast<size_t>(i)]
                                         : -vars[static_cast<size_t>(i)]);
            }
            f.clauses.push_back(cl);
        }
        check_formula(f);
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << formulas << " formulas, max |dev| = " << worst;
    report(5, "#SAT reduction", worst <= 1e-12, secs, d.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xC6);
    double worst = 0;
    int circuits = 0;
    for (int trial = 0; trial < 200; trial++) {
        int n = 2 + static_cast<int>(rng() % 7);               // 2..8
        int k = 1 + static_cast<int>(rng() % std::min(3, 12 - n));  // width+k <= 12
        RandomCircuitOptions opts;
        opts.measurements = k;
        CircuitProgram c = random_nonadaptive_circuit(n, 25, opts, rng);
        bool adaptive = (trial % 2 == 1);
        if (adaptive) {
            AffineCondition cond;
            cond.outcome_ids = {0};
            cond.constant = rng() & 1;
            c.ops.emplace_back(ConditionalGate{random_clifford_gate(n, rng), cond});
        }
        auto base = run_distribution(c);
        CircuitProgram d = defer_measurements(c);
        if (d.n > 12) {
            std::printf("criterion 6: internal sizing bug (width %d)\n", d.n);
            failures++;
            return;
        }
        worst = std::max(worst, max_dist_deviation(base, run_distribution(d)));
        if (!adaptive) {
            worst = std::max(worst, max_dist_deviation(base, run_distribution(unitarize(c))));
        }
        circuits++;
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << circuits << " circuits, max |dev| = " << worst;
    report(6, "rewrite equivalence", worst <= 1e-9 && circuits >= 200, secs, d.str());
}

// ---------------------------------------------------------------- criterion 7

double time_marginal(int n, int gates, std::mt19937_64& rng) {
    CircuitProgram c;
    c.n = n;
    auto gs = random_clifford_gates(n, gates, rng);
    for (const GateInstance& g : gs) c.ops.emplace_back(g);
    c.input = BitString(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) c.output_lines.push_back(i);
    BitString y(static_cast<size_t>(n));
    auto t0 = Clock::now();
    DyadicProbability p = strong_bits_marginal(c, c.basis_input(), c.output_lines, y);
    double secs = seconds_since(t0);
    if (p.is_zero && p.neg_log2 != 0) std::abort();  // keep the result alive
    return secs;
}

void criterion7() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xC7);
    double big = time_marginal(1024, 100000, rng);

    const int sizes[] = {128, 256, 512, 1024};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::ostringstream series;
    for (int n : sizes) {
        double t = time_marginal(n, 100 * n, rng);
        t = std::max(t, 1e-4);  // clamp timer noise floor
        double lx = std::log2(static_cast<double>(n)), ly = std::log2(t);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        series << " t(" << n << ")=" << t << "s";
    }
    double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    std::ostringstream d;
    d << "n=1024/N=1e5/m=1024 in " << big << " s; slope = " << slope << ";"
      << series.str();
    report(7, "performance", big <= 5.0 && slope <= 3.2, seconds_since(t0), d.str());
}

// ---------------------------------------------------------------- criterion 8

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLIFFSIM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    char buf[512];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/cliffsim_acceptance_" + name;
    std::ofstream(path) << content;
    return path;
}

void criterion8() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string why;

    // the sixteen table cells
    struct Cell {
        bool adaptive, product, many;
        SimComplexity strong, weak;
    };
    const Cell table[] = {
        {false, false, false, SimComplexity::ClP, SimComplexity::ClP},
        {false, false, true, SimComplexity::ClP, SimComplexity::ClP},
        {false, true, false, SimComplexity::ClP, SimComplexity::ClP},
        {false, true, true, SimComplexity::SharpPHard, SimComplexity::PHCollapse},
        {true, false, false, SimComplexity::SharpPHard, SimComplexity::ClP},
        {true, false, true, SimComplexity::SharpPHard, SimComplexity::ClP},
        {true, true, false, SimComplexity::SharpPHard, SimComplexity::QCHard},
        {true, true, true, SimComplexity::SharpPHard, SimComplexity::QCHard},
    };
    for (const Cell& cell : table) {
        TaskClass t{cell.adaptive, cell.product, cell.many};
        if (strong_complexity(t) != cell.strong || weak_complexity(t) != cell.weak) {
            ok = false;
            why += "table cell mismatch at " + class_acronym(t) + "; ";
        }
    }

    // hard-class CLI requests: exit code 1 + theorem name
    struct CliCase {
        const char* name;
        const char* circuit;
        const char* args;
        const char* theorem;
    };
    const CliCase cases[] = {
        {"adaptive_strong",
         "qubits 2\nM 1 -> m0\nCOND m0 : X 2\nout 2\n",
         "simulate strong", "Theorem 2"},
        {"prod_many_strong",
         "qubits 2\ninput prod |pi/4> |0>\nH 1\nout 1 2\n",
         "simulate strong", "Theorem 6"},
        {"prod_adaptive_sample",
         "qubits 2\ninput prod |pi/4> |0>\nM 1 -> m0\nCOND m0 : X 2\nout 2\n",
         "simulate sample", "Theorem 3"},
        {"prod_many_sample",
         "qubits 2\ninput prod |pi/4> |0>\nH 1\nout 1 2\n",
         "simulate sample", "Theorem 7"},
    };
    for (const CliCase& cc : cases) {
        std::string path = write_temp(std::string(cc.name) + ".circ", cc.circuit);
        CliResult r = run_cli(std::string(cc.args) + " " + path);
        if (r.exit_code != 1) {
            ok = false;
            why += std::string(cc.name) + " exit code " + std::to_string(r.exit_code) +
                   " != 1; ";
        }
        if (r.output.find(cc.theorem) == std::string::npos) {
            ok = false;
            why += std::string(cc.name) + " output lacks " + cc.theorem + "; ";
        }
        std::remove(path.c_str());
    }

    // a supported request exits 0 for contrast
    std::string good = write_temp("good.circ", "qubits 2\nH 1\nCX 1 2\nout 1 2\n");
    CliResult r = run_cli("classify " + good);
    if (r.exit_code != 0) {
        ok = false;
        why += "classify of an easy circuit exited " + std::to_string(r.exit_code) + "; ";
    }
    std::remove(good.c_str());

    report(8, "classification and refusals", ok, seconds_since(t0),
           ok ? "16 cells + CLI exit codes" : why);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures > 0) {
        std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 8 criteria PASS\n");
    return 0;
}
