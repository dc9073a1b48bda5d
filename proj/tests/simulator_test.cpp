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

#include "oracles.hpp"
#include "qwild/analysis.hpp"
#include "qwild/io.hpp"
#include "qwild/pipeline.hpp"
#include "qwild/simulator.hpp"
#include "qwild/synthesis.hpp"

using namespace qwild;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Statevector uniform(unsigned n) {
  Statevector s(n);
  for (unsigned q = 0; q < n; ++q) apply_gate(s, Gate::h(q));
  return s;
}

Circuit grover_for(const TruthTable& t, int k) { return build_grover_circuit(synthesize_phase_oracle(t), k); }

TruthTable two_match() { return TruthTable::from_string("00110000"); }

}  // namespace

TEST(InitState, Basis) {
  const auto s1 = init_state(1);
  EXPECT_EQ(s1[0], amplitude(1.0, 0.0));
  EXPECT_EQ(s1[1], amplitude(0.0, 0.0));
  EXPECT_EQ(init_state(3)[0], amplitude(1.0, 0.0));
  EXPECT_THROW(init_state(0), input_error);
  EXPECT_THROW(init_state(max_qubits + 1), input_error);
}

TEST(ApplyGate, Hadamard) {
  auto s = init_state(1);
  apply_gate(s, Gate::h(0));
  EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s[1].real(), kInvSqrt2, 1e-15);
  const auto u = uniform(3);
  for (std::size_t x = 0; x < 8; ++x) EXPECT_NEAR(u[x].real(), 1.0 / std::sqrt(8.0), 1e-15);
}

TEST(ApplyGate, QubitZeroIsMostSignificant) {
  auto s = init_state(3);
  apply_gate(s, Gate::x(0));
  EXPECT_EQ(s[0b100], amplitude(1.0, 0.0));
  apply_gate(s, Gate::x(2));
  EXPECT_EQ(s[0b101], amplitude(1.0, 0.0));
}

TEST(ApplyGate, PhaseGates) {
  auto s = init_state(2);
  apply_gate(s, Gate::x(0));
  apply_gate(s, Gate::x(1));
  apply_gate(s, Gate::mcz({0, 1}));
  EXPECT_EQ(s[3], amplitude(-1.0, 0.0));
  apply_gate(s, Gate::z(1));
  EXPECT_EQ(s[3], amplitude(1.0, 0.0));
  apply_gate(s, Gate::global_phase_flip());
  EXPECT_EQ(s[3], amplitude(-1.0, 0.0));
  EXPECT_THROW(apply_gate(s, Gate::h(2)), input_error);
}

TEST(ApplyGate, PauliY) {
  auto s = init_state(1);
  apply_pauli(s, 0, Pauli::Y);
  EXPECT_EQ(s[1], amplitude(0.0, 1.0));
  apply_pauli(s, 0, Pauli::Y);
  EXPECT_EQ(s[0], amplitude(1.0, 0.0));
}

TEST(DiagonalOracle, Examples) {
  auto s = uniform(3);
  const auto before = s.amplitudes();
  apply_diagonal_oracle(s, TruthTable(3));
  EXPECT_EQ(s.amplitudes(), before);

  apply_diagonal_oracle(s, two_match());
  const double a = 1.0 / std::sqrt(8.0);
  for (std::size_t x = 0; x < 8; ++x) {
    const double want = (x == 0b010 || x == 0b011) ? -a : a;
    EXPECT_NEAR(s[x].real(), want, 1e-15);
  }

  auto t = uniform(3);
  apply_diagonal_oracle(t, TruthTable::constant(3, true));
  for (std::size_t x = 0; x < 8; ++x) EXPECT_NEAR(t[x].real(), -a, 1e-15);
  EXPECT_THROW(apply_diagonal_oracle(t, TruthTable(2)), input_error);
}

TEST(DiagonalOracle, AgreesWithSynthesizedCircuit) {
  std::mt19937_64 rng(41);
  for (unsigned n = 1; n <= 6; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto t = qwild::testing::random_table(n, rng);
      auto fast = uniform(n);
      // A non-uniform input so phase differences are visible everywhere.
      for (std::size_t x = 0; x < fast.size(); ++x) fast.amplitudes()[x] *= amplitude(1.0 + x, 0.5 * x);
      auto slow = fast;
      apply_diagonal_oracle(fast, t);
      const auto oracle = synthesize_phase_oracle(t);
      for (const auto& g : oracle.gates()) apply_gate(slow, g);
      for (std::size_t x = 0; x < fast.size(); ++x) ASSERT_LE(std::abs(fast[x] - slow[x]), 1e-10);
    }
  }
}

TEST(Probabilities, BundledScenarios) {
  for (double p : probabilities(uniform(3))) EXPECT_NEAR(p, 0.125, 1e-15);

  const auto two = probabilities(simulate(grover_for(two_match(), 1)));
  for (std::size_t x = 0; x < 8; ++x) EXPECT_NEAR(two[x], (x == 2 || x == 3) ? 0.5 : 0.0, 1e-9);

  const auto one = probabilities(simulate(grover_for(TruthTable::from_string("10000000"), 2)));
  EXPECT_NEAR(one[0], 0.9453125, 1e-9);
}

TEST(GroverLaw, SmallSweep) {
  std::mt19937_64 rng(42);
  for (unsigned n = 1; n <= 5; ++n) {
    for (std::size_t m = 1; m < (std::size_t{1} << n); ++m) {
      const auto t = qwild::testing::table_with_marked(n, m, rng);
      for (unsigned k = 0; k <= 4; ++k) {
        const auto p = probabilities(simulate(grover_for(t, static_cast<int>(k))));
        double mass = 0.0;
        for (auto x : t.ones()) mass += p[x];
        ASSERT_NEAR(mass, qwild::testing::grover_success(n, m, k), 1e-9) << "n=" << n << " m=" << m << " k=" << k;
      }
    }
  }
}

TEST(GroverLaw, ControlStaysUniform) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 4; ++k) {
      const auto s = simulate(grover_for(TruthTable(n), k));
      const double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
      for (std::size_t x = 0; x < s.size(); ++x) ASSERT_LE(std::abs(s[x] - amplitude(a, 0.0)), 1e-12);
    }
  }
}

TEST(Norm, PreservedByEveryGate) {
  std::mt19937_64 rng(43);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto c = grover_for(qwild::testing::random_table(n, rng), 3);
    simulate(c, [](const Statevector& s, const Gate&) { ASSERT_NEAR(s.norm(), 1.0, 1e-12); });
  }
}

TEST(Measure, DeterministicState) {
  auto s = init_state(3);
  apply_gate(s, Gate::x(1));
  const auto h = measure(s, 100, 5);
  EXPECT_EQ(h.counts, (std::map<std::string, std::uint64_t>{{"010", 100}}));
  EXPECT_EQ(h.shots, 100u);
  EXPECT_THROW(measure(s, 0, 5), input_error);
}

TEST(Measure, SeededDeterminism) {
  const auto s = simulate(grover_for(two_match(), 1));
  EXPECT_EQ(measure(uniform(3), 500, 99), measure(uniform(3), 500, 99));
  EXPECT_NE(measure(uniform(3), 500, 99), measure(uniform(3), 500, 100));
  EXPECT_EQ(measure(s, 64, 1), measure(s, 64, 1));
}

TEST(Measure, UniformWithinFiveSigma) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto h = measure(uniform(3), 8000, seed);
    const double sigma = std::sqrt(8000.0 * 0.125 * 0.875);
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < 8; ++x) {
      const auto c = h.count(index_to_bits(x, 3));
      total += c;
      EXPECT_LE(std::abs(static_cast<double>(c) - 1000.0), 5 * sigma);
    }
    EXPECT_EQ(total, 8000u);
  }
}

TEST(RunNoisy, ZeroNoiseEqualsIdealMeasurement) {
  const auto c = grover_for(TruthTable::from_string("10000000"), 2);
  for (std::uint64_t seed : {0u, 7u, 123u}) {
    EXPECT_EQ(run_noisy(c, NoiseModel{}, 1024, seed), measure(simulate(c), 1024, seed));
  }
}

TEST(RunNoisy, SeededDeterminismAndValidation) {
  const auto c = grover_for(two_match(), 1);
  const NoiseModel noise{0.01, 0.05, 0.02};
  EXPECT_EQ(run_noisy(c, noise, 300, 3), run_noisy(c, noise, 300, 3));
  EXPECT_THROW(run_noisy(c, NoiseModel{1.5, 0, 0}, 10, 1), input_error);
  EXPECT_THROW(run_noisy(c, NoiseModel{0, -0.1, 0}, 10, 1), input_error);
  EXPECT_THROW(run_noisy(c, noise, 0, 1), input_error);
}

TEST(RunNoisy, FullReadoutFlipInvertsEveryBit) {
  auto c = Circuit(3);
  c.add(Gate::x(1));
  const auto h = run_noisy(c, NoiseModel{0.0, 0.0, 1.0}, 50, 4);
  EXPECT_EQ(h.counts, (std::map<std::string, std::uint64_t>{{"101", 50}}));
}

TEST(RunNoisy, TwoMatchSignalSurvivesDefaultNoise) {
  const auto c = grover_for(two_match(), 1);
  const auto h = run_noisy(c, NoiseModel{0.001, 0.01, 0.02}, 1024, 7);
  const auto top = top_k(h, 2);
  EXPECT_EQ((std::set<std::string>{top[0].bits, top[1].bits}), (std::set<std::string>{"010", "011"}));
}

TEST(RunNoisy, ControlStaysSpread) {
  const auto c = grover_for(TruthTable(3), 1);
  const auto h = run_noisy(c, NoiseModel{0.001, 0.01, 0.02}, 1024, 7);
  EXPECT_LT(top_k(h, 1)[0].probability, 0.25);
}

TEST(RunNoisy, DepolarizingSpreadsDeterministicState) {
  Circuit c(1);
  for (int i = 0; i < 40; ++i) c.add(Gate::x(0));
  const auto h = run_noisy(c, NoiseModel{0.3, 0.0, 0.0}, 4000, 9);
  // Repeated depolarizing drives the qubit towards the maximally mixed state.
  EXPECT_NEAR(static_cast<double>(h.count("1")) / 4000.0, 0.5, 0.05);
}

TEST(HistogramJson, SchemaAndRoundTrip) {
  const auto h = measure(uniform(2), 40, 3);
  const auto j = histogram_to_json(h);
  EXPECT_EQ(j.at("shots"), 40);
  EXPECT_EQ(histogram_from_json(j), h);
  EXPECT_THROW(histogram_from_json(json::parse(R"({"shots":3,"counts":{"01":2}})")), input_error);
  EXPECT_THROW(histogram_from_json(json::parse(R"({"shots":2,"counts":{"01":1,"1":1}})")), input_error);
}

TEST(StatevectorJson, PairsOfReImag) {
  auto s = init_state(1);
  apply_pauli(s, 0, Pauli::Y);
  EXPECT_EQ(statevector_to_json(s).dump(), "[[0.0,0.0],[0.0,1.0]]");
}
