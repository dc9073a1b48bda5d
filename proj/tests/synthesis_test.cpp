// Copyright 2026 The qwild Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "oracles.hpp"
#include "qwild/boolexpr.hpp"
#include "qwild/io.hpp"
#include "qwild/simulator.hpp"
#include "qwild/synthesis.hpp"

using namespace qwild;

namespace {

// Column `x` of the circuit's unitary: the state reached from |x>.
Statevector column(const Circuit& c, std::size_t x) {
  Statevector s(c.qubit_count());
  s.amplitudes()[0] = 0.0;
  s.amplitudes()[x] = 1.0;
  for (const auto& g : c.gates()) apply_gate(s, g);
  return s;
}

double max_diagonal_deviation(const Circuit& c, const TruthTable& t) {
  double worst = 0.0;
  for (std::size_t x = 0; x < t.size(); ++x) {
    const auto s = column(c, x);
    for (std::size_t r = 0; r < s.size(); ++r) {
      const double want = r == x ? (t.get(x) ? -1.0 : 1.0) : 0.0;
      worst = std::max(worst, std::abs(s[r] - amplitude{want, 0.0}));
    }
  }
  return worst;
}

}  // namespace

TEST(PhaseOracle, SingleMonomial) {
  const auto c = synthesize_phase_oracle(truth_table(parse("x0&x1", 2), 2));
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::mcz({0, 1}));
}

TEST(PhaseOracle, OrNeedsThreeGates) {
  const auto t = truth_table(parse("x0|x1", 2), 2);
  const auto c = synthesize_phase_oracle(t);
  EXPECT_EQ(c.gates(), (std::vector<Gate>{Gate::z(1), Gate::z(0), Gate::mcz({0, 1})}));
  EXPECT_LE(max_diagonal_deviation(c, t), 1e-12);
}

TEST(PhaseOracle, NegationUsesGlobalPhase) {
  const auto t = truth_table(parse("~x0", 1), 1);
  const auto c = synthesize_phase_oracle(t);
  EXPECT_EQ(c.gates(), (std::vector<Gate>{Gate::global_phase_flip(), Gate::z(0)}));
  EXPECT_LE(max_diagonal_deviation(c, t), 1e-12);
}

TEST(PhaseOracle, ExactOnRandomTables) {
  std::mt19937_64 rng(31);
  for (unsigned n = 1; n <= 6; ++n) {
    for (int i = 0; i < 30; ++i) {
      const auto t = qwild::testing::random_table(n, rng);
      ASSERT_LE(max_diagonal_deviation(synthesize_phase_oracle(t), t), 1e-10);
    }
  }
}

TEST(Diffusion, MatchesReflectionAboutUniform) {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto d = build_diffusion(n);
    double worst = 0.0;
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
      const auto s = column(d, x);
      for (std::size_t r = 0; r < s.size(); ++r) {
        worst = std::max(worst, std::abs(s[r] - amplitude{qwild::testing::diffusion_entry(n, r, x), 0.0}));
      }
    }
    EXPECT_LE(worst, 1e-12) << "n=" << n;
  }
}

TEST(Diffusion, FixesUniformState) {
  const auto d = build_diffusion(2);
  Statevector s(2);
  apply_gate(s, Gate::h(0));
  apply_gate(s, Gate::h(1));
  for (const auto& g : d.gates()) apply_gate(s, g);
  for (std::size_t x = 0; x < 4; ++x) EXPECT_NEAR(s[x].real(), 0.5, 1e-12);
}

TEST(Diffusion, DiagonalEntries) {
  const auto d = build_diffusion(3);
  for (std::size_t x = 0; x < 8; ++x) EXPECT_NEAR(column(d, x)[x].real(), -0.75, 1e-12);
}

TEST(IterationCount, Examples) {
  EXPECT_EQ(iteration_count(3, 1), 2u);
  EXPECT_EQ(iteration_count(3, 2), 1u);
  EXPECT_EQ(iteration_count(3, 0), 1u);
  EXPECT_EQ(iteration_count(3, 8), 1u);
  EXPECT_EQ(iteration_count(10, 1), 25u);
  EXPECT_THROW(iteration_count(3, 9), input_error);
}

TEST(GroverCircuit, Structure) {
  const auto oracle = synthesize_phase_oracle(truth_table(parse("x0&x1", 2), 2));
  const auto c0 = build_grover_circuit(oracle, 0);
  EXPECT_EQ(c0.gates(), (std::vector<Gate>{Gate::h(0), Gate::h(1)}));
  const auto c2 = build_grover_circuit(oracle, 2);
  EXPECT_EQ(c2.size(), 2 + 2 * (oracle.size() + build_diffusion(2).size()));
  EXPECT_THROW(build_grover_circuit(oracle, -1), input_error);
  Circuit wide(3);
  EXPECT_THROW(wide.append(oracle), input_error);
}

TEST(Circuit, RejectsInvalidGates) {
  Circuit c(2);
  EXPECT_THROW(c.add(Gate::h(2)), input_error);
  EXPECT_THROW(c.add(Gate::mcz({0, 2})), input_error);
  EXPECT_THROW(Gate::mcz({1, 1}), input_error);
  EXPECT_THROW(Gate::mcz({1}), input_error);
  EXPECT_THROW(Circuit(0), input_error);
}

TEST(GateStats, Depth) {
  Circuit a(2);
  a.add(Gate::z(0)).add(Gate::z(1));
  EXPECT_EQ(gate_stats(a).depth, 1u);
  Circuit b(2);
  b.add(Gate::z(0)).add(Gate::mcz({0, 1}));
  EXPECT_EQ(gate_stats(b).depth, 2u);
  const auto before = gate_stats(b).depth;
  b.add(Gate::global_phase_flip());
  EXPECT_EQ(gate_stats(b).depth, before);
}

TEST(GateStats, DiffusionCounts) {
  const auto s = gate_stats(build_diffusion(3));
  EXPECT_EQ(s.counts.at("h"), 6u);
  EXPECT_EQ(s.counts.at("x"), 6u);
  EXPECT_EQ(s.counts.at("mcz"), 1u);
  EXPECT_EQ(s.mcz_arity.at(3), 1u);
  EXPECT_EQ(s.counts.at("gphase"), 1u);
  EXPECT_EQ(s.depth, 5u);
}

TEST(CircuitJson, SchemaAndRoundTrip) {
  Circuit c(3);
  c.add(Gate::h(0)).add(Gate::mcz({0, 1, 2})).add(Gate::global_phase_flip());
  EXPECT_EQ(circuit_to_json(c).dump(),
            R"({"qubits":3,"gates":[{"g":"h","q":[0]},{"g":"mcz","q":[0,1,2]},{"g":"gphase"}]})");
  EXPECT_EQ(circuit_from_json(circuit_to_json(c)), c);
  const auto grover = build_grover_circuit(synthesize_phase_oracle(truth_table(parse("x0|x2", 3), 3)), 2);
  EXPECT_EQ(circuit_from_json(json::parse(circuit_to_json(grover).dump())), grover);
  EXPECT_THROW(circuit_from_json(json::parse(R"({"qubits":1,"gates":[{"g":"cx","q":[0]}]})")), input_error);
  EXPECT_THROW(circuit_from_json(json::parse(R"({"gates":[]})")), input_error);
}

TEST(Qasm, Export) {
  Circuit c(3);
  c.add(Gate::h(0)).add(Gate::mcz({0, 1})).add(Gate::mcz({0, 1, 2})).add(Gate::global_phase_flip());
  const auto q = to_qasm(c);
  EXPECT_EQ(q,
            "OPENQASM 2.0;\n"
            "include \"qelib1.inc\";\n"
            "// mcz3: Z on the all-ones subspace of 3 qubits\n"
            "opaque mcz3 q0,q1,q2;\n"
            "qreg q[3];\n"
            "h q[0];\n"
            "cz q[0],q[1];\n"
            "mcz3 q[0],q[1],q[2];\n"
            "// gphase: global phase -1\n");
}
