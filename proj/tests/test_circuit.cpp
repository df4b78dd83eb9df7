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

#include "test_support.hpp"

#include "doctest.h"

using namespace cliffsim;
using namespace cliffsim::testing;

TEST_CASE("parse a basic adaptive circuit") {
    const char* text =
        "# toy adaptive circuit\n"
        "qubits 3\n"
        "input 010\n"
        "H 1\n"
        "M 1 -> m0\n"
        "COND m0^1 : CX 2 3\n"
        "out 2 3\n";
    CircuitProgram c = parse_circuit(text);
    CHECK(c.n == 3);
    CHECK(c.basis_input() == BitString::from_string("010"));
    REQUIRE(c.ops.size() == 3);
    CHECK(std::get<GateInstance>(c.ops[0]) == gate(GateKind::H, 0));
    CHECK(std::get<Measurement>(c.ops[1]) == Measurement{0, 0});
    const auto& cg = std::get<ConditionalGate>(c.ops[2]);
    CHECK(cg.gate == gate(GateKind::CX, 1, 2));
    CHECK(cg.condition.outcome_ids == std::vector<int>{0});
    CHECK(cg.condition.constant);
    CHECK(c.output_lines == std::vector<int>{1, 2});
    CHECK(!c.is_nonadaptive());
    CHECK(!c.is_unitary());
    CHECK(c.is_clifford_only());
    CHECK(c.measurement_count() == 1);
}

TEST_CASE("parse product input with named and numeric states") {
    const char* text =
        "qubits 3\n"
        "input prod |pi/4> |-> 0.6,0;0,0.8\n"
        "S 1\n"
        "out 1 2 3\n";
    CircuitProgram c = parse_circuit(text);
    REQUIRE(!c.has_basis_input());
    const auto& st = std::get<std::vector<SingleQubitState>>(c.input);
    CHECK(st[0] == ket_pi4());
    CHECK(st[1] == ket_minus());
    CHECK(st[2].amp0 == std::complex<double>{0.6, 0});
    CHECK(st[2].amp1 == std::complex<double>{0, 0.8});
    CHECK(!c.is_clifford_only());
}

TEST_CASE("omitted input defaults to all-zero basis state") {
    CircuitProgram c = parse_circuit("qubits 2\nH 1\nout 1 2\n");
    REQUIRE(c.has_basis_input());
    CHECK(c.basis_input().is_zero());
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error_on_line = [](const std::string& text, int line) {
        try {
            parse_circuit(text);
            FAIL("expected ParseError for:\n" << text);
        } catch (const ParseError& e) {
            CHECK(e.line_number == line);
        }
    };
    expect_error_on_line("qubits 2\nCZ 1 1\nout 1\n", 2);          // repeated line
    expect_error_on_line("H 1\nqubits 2\nout 1\n", 1);             // qubits not first
    expect_error_on_line("qubits 2\nH 3\nout 1\n", 2);             // out of range
    expect_error_on_line("qubits 2\nFOO 1\nout 1\n", 2);           // unknown gate
    expect_error_on_line("qubits 2\nH 1 2\nout 1\n", 2);           // wrong arity
    expect_error_on_line("qubits 2\ninput 0\nout 1\n", 2);         // wrong input length
    expect_error_on_line("qubits 2\nM 1 -> m0\nM 2 -> m0\nout 1\n", 3);  // dup id
    expect_error_on_line("qubits 2\nCOND m5 : X 1\nout 1\n", 2);   // unknown outcome
    expect_error_on_line("qubits 2\nH 1\n", 2);                    // missing out
    expect_error_on_line("qubits 2\nout 2 1\n", 2);                // unsorted out
    expect_error_on_line("qubits 2\ninput prod |0> 2,0;0,0\nout 1\n", 2);  // not normalized
    expect_error_on_line("qubits 0\nout 1\n", 1);                  // bad width
}

TEST_CASE("render/parse round trip on random circuits") {
    std::mt19937_64 rng(211);
    for (int trial = 0; trial < 100; trial++) {
        int n = 1 + static_cast<int>(rng() % 8);
        RandomCircuitOptions opts;
        opts.measurements = static_cast<int>(rng() % 4);
        CircuitProgram c = random_nonadaptive_circuit(n, 12, opts, rng);
        // sprinkle conditionals referencing earlier outcomes
        if (opts.measurements > 0 && n >= 2) {
            AffineCondition cond;
            cond.outcome_ids = {0};
            cond.constant = rng() & 1;
            c.ops.emplace_back(ConditionalGate{gate(GateKind::Z, 0), cond});
        }
        c.validate();
        CircuitProgram back = parse_circuit(render_circuit(c));
        CHECK(back == c);
    }
}

TEST_CASE("round trip preserves product inputs") {
    std::mt19937_64 rng(223);
    CircuitProgram c;
    c.n = 4;
    c.input = std::vector<SingleQubitState>{ket0(), ket_pi4(), random_state(rng),
                                            random_state(rng)};
    c.ops = {Operation{gate(GateKind::H, 0)}, Operation{gate(GateKind::CX, 0, 3)}};
    c.output_lines = {0, 3};
    CircuitProgram back = parse_circuit(render_circuit(c));
    REQUIRE(!back.has_basis_input());
    const auto& a = std::get<std::vector<SingleQubitState>>(c.input);
    const auto& b = std::get<std::vector<SingleQubitState>>(back.input);
    for (size_t i = 0; i < 4; i++) {
        CHECK(std::abs(a[i].amp0 - b[i].amp0) < 1e-15);
        CHECK(std::abs(a[i].amp1 - b[i].amp1) < 1e-15);
    }
}

TEST_CASE("validate rejects malformed programs") {
    CircuitProgram c;
    c.n = 2;
    c.input = BitString(2);
    c.output_lines = {0};
    c.validate();  // minimal program is fine

    CircuitProgram bad = c;
    bad.ops = {Operation{GateInstance{GateKind::CZ, 0, 0}}};
    CHECK_THROWS_AS(bad.validate(), DimensionError);

    bad = c;
    bad.ops = {Operation{ConditionalGate{gate(GateKind::X, 0), AffineCondition{{3}, false}}}};
    CHECK_THROWS_AS(bad.validate(), DimensionError);

    bad = c;
    bad.output_lines = {1, 0};
    CHECK_THROWS_AS(bad.validate(), DimensionError);

    bad = c;
    bad.output_lines = {0, 0};
    CHECK_THROWS_AS(bad.validate(), DimensionError);

    bad = c;
    bad.input = BitString(3);
    CHECK_THROWS_AS(bad.validate(), DimensionError);
}

TEST_CASE("affine condition evaluation") {
    AffineCondition cond{{0, 2}, true};
    CHECK(cond.evaluate({{0, true}, {2, false}}) == false);
    CHECK(cond.evaluate({{0, true}, {2, true}}) == true);
    CHECK_THROWS_AS(cond.evaluate({{0, true}}), SimulationError);
}

TEST_CASE("unitarize structure") {
    CircuitProgram c = parse_circuit(
        "qubits 2\nH 1\nM 1 -> m0\nCX 1 2\nM 2 -> m1\nout 2\n");
    CircuitProgram u = unitarize(c);
    CHECK(u.n == 4);
    CHECK(u.is_unitary());
    CHECK(u.measurement_count() == 0);
    CHECK(u.output_lines == c.output_lines);
    u.validate();
    // adaptive circuits are refused
    CircuitProgram adaptive = parse_circuit(
        "qubits 2\nM 1 -> m0\nCOND m0 : X 2\nout 2\n");
    CHECK_THROWS_AS(unitarize(adaptive), CircuitClassError);
}

TEST_CASE("defer_measurements structure") {
    CircuitProgram c = parse_circuit(
        "qubits 2\nH 1\nM 1 -> m0\nCOND m0 : X 2\nM 2 -> m1\nout 2\n");
    CircuitProgram d = defer_measurements(c);
    CHECK(d.n == 4);
    CHECK(d.measurement_count() == 2);
    d.validate();
    // every measurement acts on a fresh ancilla immediately after its copy-out
    int seen = 0;
    for (size_t i = 0; i < d.ops.size(); i++) {
        if (const auto* m = std::get_if<Measurement>(&d.ops[i])) {
            CHECK(m->line >= c.n);  // ancilla line
            const auto* g = std::get_if<GateInstance>(&d.ops[i - 1]);
            REQUIRE(g != nullptr);
            CHECK(g->kind == GateKind::CX);
            CHECK(g->line1 == m->line);
            seen++;
        }
    }
    CHECK(seen == 2);
}

TEST_CASE("unitarize and defer_measurements preserve the output distribution") {
    std::mt19937_64 rng(227);
    for (int trial = 0; trial < 30; trial++) {
        int n = 2 + static_cast<int>(rng() % 5);
        RandomCircuitOptions opts;
        opts.measurements = 1 + static_cast<int>(rng() % 3);
        CircuitProgram c = random_nonadaptive_circuit(n, 25, opts, rng);
        auto base = run_distribution(c);
        CHECK(max_dist_deviation(base, run_distribution(unitarize(c))) < 1e-12);
        CHECK(max_dist_deviation(base, run_distribution(defer_measurements(c))) < 1e-12);
    }
}

TEST_CASE("defer_measurements preserves adaptive circuits") {
    std::mt19937_64 rng(229);
    for (int trial = 0; trial < 20; trial++) {
        int n = 2 + static_cast<int>(rng() % 4);
        RandomCircuitOptions opts;
        opts.measurements = 2;
        CircuitProgram c = random_nonadaptive_circuit(n, 20, opts, rng);
        AffineCondition cond;
        cond.outcome_ids = {0, 1};
        cond.constant = rng() & 1;
        c.ops.emplace_back(ConditionalGate{random_clifford_gate(n, rng), cond});
        CHECK(max_dist_deviation(run_distribution(c),
                                 run_distribution(defer_measurements(c))) < 1e-12);
    }
}

TEST_CASE("standardize_for_theorem4 reduces marginals to the all-zero query") {
    std::mt19937_64 rng(233);
    for (int trial = 0; trial < 30; trial++) {
        int n = 2 + static_cast<int>(rng() % 4);
        RandomCircuitOptions opts;
        opts.measurements = static_cast<int>(rng() % 3);
        CircuitProgram c = random_nonadaptive_circuit(n, 20, opts, rng);
        // random query: subset of lines, random x and y
        std::vector<int> out_lines;
        for (int i = 0; i < n; i++) {
            if (rng() & 1) out_lines.push_back(i);
        }
        if (out_lines.empty()) out_lines.push_back(static_cast<int>(rng() % n));
        size_t m = out_lines.size();
        BitString x(static_cast<size_t>(n)), y(m);
        for (int i = 0; i < n; i++) x.set(static_cast<size_t>(i), rng() & 1);
        for (size_t j = 0; j < m; j++) y.set(j, rng() & 1);

        CircuitProgram query = c;
        query.input = x;
        query.output_lines = out_lines;
        auto dist = run_distribution(query);
        uint64_t key = 0;
        for (size_t j = 0; j < m; j++) {
            if (y.get(j)) key |= uint64_t{1} << j;
        }
        double expected = dist.count(key) ? dist.at(key) : 0.0;

        CircuitProgram std_c = standardize_for_theorem4(c, x, y, out_lines);
        CHECK(std_c.is_unitary());
        CHECK(std_c.has_basis_input());
        CHECK(std_c.basis_input().is_zero());
        auto std_dist = run_distribution(std_c);
        double got = std_dist.count(0) ? std_dist.at(0) : 0.0;
        CHECK(std::abs(got - expected) < 1e-10);
    }
}

TEST_CASE("standardize_for_theorem4 rejects bad queries") {
    CircuitProgram c = parse_circuit("qubits 2\nH 1\nout 1\n");
    CHECK_THROWS_AS(
        standardize_for_theorem4(c, BitString(3), BitString(1), {0}), DimensionError);
    CHECK_THROWS_AS(
        standardize_for_theorem4(c, BitString(2), BitString(2), {0}), DimensionError);
    CHECK_THROWS_AS(
        standardize_for_theorem4(c, BitString(2), BitString(1), {5}), DimensionError);
    CircuitProgram adaptive = parse_circuit(
        "qubits 2\nM 1 -> m0\nCOND m0 : X 2\nout 2\n");
    CHECK_THROWS_AS(
        standardize_for_theorem4(adaptive, BitString(2), BitString(1), {1}),
        CircuitClassError);
    CircuitProgram with_s = parse_circuit("qubits 1\nS 1\nout 1\n");
    CHECK_THROWS_AS(
        standardize_for_theorem4(with_s, BitString(1), BitString(1), {0}),
        UnsupportedGateError);
}
