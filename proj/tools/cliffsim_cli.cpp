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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cliffsim/cliffsim.hpp"

namespace {

using namespace cliffsim;

// Exit codes: 0 success, 1 domain refusal (hard class / cap), 2 usage error.
constexpr int kExitOk = 0;
constexpr int kExitRefused = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CLI::ValidationError("cannot open output file: " + path);
    out << text;
}

std::string format_decimal(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

/// Spec'd probability rendering: `0`, `2^-<k>`, or a 17-significant-digit
/// decimal for non-dyadic values.
std::string format_probability(double p) {
    if (p == 0.0) return "0";
    for (int k = 0; k <= 64; k++) {
        if (p == std::ldexp(1.0, -k)) return k == 0 ? "1" : "2^-" + std::to_string(k);
    }
    return format_decimal(p);
}

int cmd_classify(const std::string& file) {
    CircuitProgram c = parse_circuit(read_file(file));
    std::cout << classify_report(c);
    return kExitOk;
}

int cmd_simulate_strong(const std::string& file, std::string y_str, bool force_oracle) {
    CircuitProgram c = parse_circuit(read_file(file));
    TaskClass t = classify_task(c);
    if (y_str.empty()) y_str.assign(c.output_lines.size(), '0');
    if (y_str.size() != c.output_lines.size()) {
        throw CLI::ValidationError("--y length must equal the number of output lines");
    }
    BitString y = BitString::from_string(y_str);

    if (force_oracle) {
        auto dist = run_distribution(c);
        uint64_t key = 0;
        for (size_t j = 0; j < y.size(); j++) {
            if (y.get(j)) key |= uint64_t{1} << j;
        }
        double p = dist.count(key) ? dist.at(key) : 0.0;
        std::cout << format_probability(p) << "\n";
        return kExitOk;
    }

    if (strong_complexity(t) != SimComplexity::ClP) {
        std::cerr << "refused: strong simulation of this class (" << class_acronym(t)
                  << ") is " << complexity_name(strong_complexity(t)) << " ("
                  << strong_attribution(t) << "); the dense oracle accepts widths up to "
                  << StateVector::kMaxQubits << " via --force-oracle\n";
        return kExitRefused;
    }
    if (!t.product_input) {
        DyadicProbability p = strong_bits_marginal(c, y);
        std::cout << p.to_string() << "\n";
    } else {
        double p = strong_out1_prod(c, c.output_lines[0], y.get(0));
        std::cout << format_probability(p) << "\n";
    }
    return kExitOk;
}

int cmd_simulate_sample(const std::string& file, int shots, uint64_t seed,
                        bool debug_outcomes) {
    CircuitProgram c = parse_circuit(read_file(file));
    TaskClass t = classify_task(c);
    if (t.product_input) {
        std::cerr << "refused: weak simulation with product inputs is out of the "
                  << "sampler's class (" << complexity_name(weak_complexity(t)) << ", "
                  << weak_attribution(t) << "); the dense oracle accepts widths up to "
                  << StateVector::kMaxQubits << "\n";
        return kExitRefused;
    }
    SampleOptions opts;
    opts.include_intermediate = debug_outcomes;
    std::map<std::string, int> freq;
    for (int s = 0; s < shots; s++) {
        BitString bits = sample_adaptive_bits(c, seed, static_cast<uint64_t>(s), opts);
        std::string line = bits.to_string();
        std::cout << line << "\n";
        freq[line]++;
    }
    std::cout << "# shots " << shots << " seed " << seed << "\n";
    for (const auto& [bits, count] : freq) {
        std::cout << "# freq " << bits << " " << count << "\n";
    }
    return kExitOk;
}

int cmd_simulate_oracle(const std::string& file, bool distribution,
                        const std::string& postselect_str, int target_line,
                        int target_value) {
    CircuitProgram c = parse_circuit(read_file(file));
    if (!postselect_str.empty()) {
        std::map<int, bool> postselect;
        std::istringstream is(postselect_str);
        std::string item;
        while (std::getline(is, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw CLI::ValidationError("postselect items must look like line=bit");
            }
            int line = std::stoi(item.substr(0, eq)) - 1;
            int bit = std::stoi(item.substr(eq + 1));
            postselect[line] = bit != 0;
        }
        if (target_line < 1) {
            throw CLI::ValidationError("--postselect needs --target <line>");
        }
        double p = run_postselected(c, postselect, target_line - 1, target_value != 0);
        std::cout << format_probability(p) << "\n";
        return kExitOk;
    }
    if (!distribution) {
        throw CLI::ValidationError("choose --distribution or --postselect");
    }
    auto dist = run_distribution(c);
    for (const auto& [key, p] : dist) {
        std::string bits(c.output_lines.size(), '0');
        for (size_t j = 0; j < bits.size(); j++) {
            if ((key >> j) & 1) bits[j] = '1';
        }
        std::cout << bits << " " << format_probability(p) << "\n";
    }
    return kExitOk;
}

int cmd_reduce(const std::string& dimacs_file, const std::string& out_path) {
    CnfFormula f = parse_dimacs(read_file(dimacs_file));
    CircuitProgram c = sharp_sat_circuit(f);
    write_output(out_path, render_circuit(c));
    return kExitOk;
}

int cmd_gadget(const std::string& file, const std::string& mode_str,
               const std::string& out_path) {
    GadgetMode mode;
    if (mode_str == "adaptive") {
        mode = GadgetMode::Adaptive;
    } else if (mode_str == "postselect") {
        mode = GadgetMode::Postselect;
    } else {
        throw CLI::ValidationError("--mode must be adaptive or postselect");
    }
    CircuitProgram c = parse_circuit(read_file(file));
    GadgetRewriteReport report = s_gadget_rewrite(c, mode);
    write_output(out_path, render_circuit(report.rewritten));
    std::cerr << "# replaced " << report.ancilla_lines.size() << " S gate(s)\n";
    return kExitOk;
}

int cmd_bench(const std::string& sizes_str, int gates_per_qubit, int fixed_gates,
              int fixed_m, uint64_t seed) {
    std::vector<int> sizes;
    std::istringstream is(sizes_str);
    std::string item;
    while (std::getline(is, item, ',')) sizes.push_back(std::stoi(item));
    for (int n : sizes) {
        int gates = fixed_gates > 0 ? fixed_gates : gates_per_qubit * n;
        int m = fixed_m > 0 ? std::min(fixed_m, n) : n;
        std::mt19937_64 rng(seed + static_cast<uint64_t>(n));
        CircuitProgram c;
        c.n = n;
        for (const GateInstance& g : random_clifford_gates(n, gates, rng)) {
            c.ops.emplace_back(g);
        }
        c.input = BitString(static_cast<size_t>(n));
        for (int i = 0; i < m; i++) c.output_lines.push_back(i);

        BitString y(static_cast<size_t>(m));
        auto t0 = std::chrono::steady_clock::now();
        DyadicProbability p = strong_bits_marginal(c, c.basis_input(), c.output_lines, y);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        // conjugation sweeps dominate: one label update per generator per gate
        double bit_ops = static_cast<double>(m) * gates;
        std::cout << "{\"suite\":\"theorem4\",\"n\":" << n << ",\"gates\":" << gates
                  << ",\"m\":" << m << ",\"seconds\":" << format_decimal(secs)
                  << ",\"label_updates_per_sec\":" << format_decimal(bit_ops / secs)
                  << ",\"p\":\"" << p.to_string() << "\"}\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation toolkit for extended Clifford circuits"};
    app.require_subcommand(1);

    std::string file, y_str, out_path, postselect_str, mode_str, sizes_str = "256";
    std::string dimacs_file;
    bool force_oracle = false, debug_outcomes = false, distribution = false;
    int shots = 1, target_line = 0, target_value = 1;
    int gates_per_qubit = 100, fixed_gates = 0, fixed_m = 0;
    uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "report the task class and complexity");
    classify->add_option("file", file)->required();

    auto* simulate = app.add_subcommand("simulate", "run a simulation engine");
    simulate->require_subcommand(1);

    auto* strong = simulate->add_subcommand("strong", "exact output probability / marginal");
    strong->add_option("file", file)->required();
    strong->add_option("--y", y_str, "queried outcome bits over the output lines");
    strong->add_flag("--force-oracle", force_oracle, "use the dense oracle regardless of class");

    auto* sample = simulate->add_subcommand("sample", "draw samples of the output distribution");
    sample->add_option("file", file)->required();
    sample->add_option("--shots", shots)->default_val(1);
    sample->add_option("--seed", seed)->default_val(0);
    sample->add_flag("--debug-outcomes", debug_outcomes,
                     "include intermediate measurement outcomes in each sample");

    auto* oracle = simulate->add_subcommand("oracle", "brute-force reference simulation");
    oracle->add_option("file", file)->required();
    oracle->add_flag("--distribution", distribution, "print the full output distribution");
    oracle->add_option("--postselect", postselect_str, "line=bit,... conditioning values");
    oracle->add_option("--target", target_line, "target line for --postselect");
    oracle->add_option("--target-value", target_value)->default_val(1);

    auto* reduce = app.add_subcommand("reduce", "problem-to-circuit reductions");
    auto* cnf = reduce->add_subcommand("cnf2circuit", "encode #SAT of a DIMACS CNF");
    cnf->add_option("--dimacs", dimacs_file)->required();
    cnf->add_option("-o,--output", out_path);

    auto* gadget = app.add_subcommand("gadget", "circuit gadget rewrites");
    auto* inject = gadget->add_subcommand("inject-s", "replace S gates by measurement gadgets");
    inject->add_option("file", file)->required();
    inject->add_option("--mode", mode_str)->required();
    inject->add_option("-o,--output", out_path);

    auto* bench = app.add_subcommand("bench", "time the exact-marginal engine");
    bench->add_option("--sizes", sizes_str, "comma-separated qubit counts");
    bench->add_option("--gates-per-qubit", gates_per_qubit)->default_val(100);
    bench->add_option("--gates", fixed_gates, "fixed gate count (overrides --gates-per-qubit)");
    bench->add_option("--m", fixed_m, "queried lines (default: all)");
    bench->add_option("--seed", seed)->default_val(0);

    try {
        app.parse(argc, argv);
        if (classify->parsed()) return cmd_classify(file);
        if (strong->parsed()) return cmd_simulate_strong(file, y_str, force_oracle);
        if (sample->parsed()) return cmd_simulate_sample(file, shots, seed, debug_outcomes);
        if (oracle->parsed()) {
            return cmd_simulate_oracle(file, distribution, postselect_str, target_line,
                                       target_value);
        }
        if (cnf->parsed()) return cmd_reduce(dimacs_file, out_path);
        if (inject->parsed()) return cmd_gadget(file, mode_str, out_path);
        if (bench->parsed()) {
            return cmd_bench(sizes_str, gates_per_qubit, fixed_gates, fixed_m, seed);
        }
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    } catch (const cliffsim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cliffsim::CircuitClassError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const cliffsim::UnsupportedGateError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const cliffsim::DimensionError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
