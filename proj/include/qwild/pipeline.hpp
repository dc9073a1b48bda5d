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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qwild/analysis.hpp"
#include "qwild/boolexpr.hpp"
#include "qwild/encoding.hpp"
#include "qwild/simulator.hpp"
#include "qwild/synthesis.hpp"

namespace qwild {

/// Everything derived from one dataset and one list of search terms.
struct CompiledSearch {
  std::vector<std::string> dataset;
  AlphabetCodec codec;
  BinaryEntitySet entities{};
  std::vector<WildcardTerm> terms;
  BoolExpr expression{};
  TruthTable table{};
  std::size_t marked = 0;
  Circuit oracle{1};
  unsigned iterations = 1;
  Circuit circuit{1};
  /// classical_match over the dataset, the ground truth for verification.
  std::set<std::string> expected{};

  unsigned qubits() const { return table.var_count(); }
  /// K for the top-K heuristic: the match count, or 1 for a control run.
  std::size_t k() const { return expected.empty() ? 1 : expected.size(); }
};

inline std::vector<WildcardTerm> parse_terms(const std::vector<std::string>& surfaces) {
  if (surfaces.empty()) throw input_error("at least one search term is required");
  std::vector<WildcardTerm> out;
  for (const auto& s : surfaces) out.push_back(parse_term(s));
  return out;
}

inline CompiledSearch compile_search(const std::vector<std::string>& dataset, const std::vector<WildcardTerm>& terms,
                                     const std::optional<AlphabetCodec>& codec = std::nullopt,
                                     std::optional<int> iterations = std::nullopt) {
  if (terms.empty()) throw input_error("at least one search term is required");
  // The automatic codec also covers term characters so a term with an
  // unseen character compiles to "no match" instead of failing.
  std::vector<std::string> alphabet_source = dataset;
  for (const auto& t : terms) alphabet_source.push_back(t.text);
  CompiledSearch c{.dataset = dataset,
                   .codec = codec ? *codec : AlphabetCodec::from_dataset(alphabet_source),
                   .entities = {},
                   .terms = terms};
  c.entities = encode_dataset(c.codec, dataset);
  const auto n = c.entities.entity_bit_length;
  if (n > max_qubits) {
    throw input_error("entities need " + std::to_string(n) + " qubits, the simulator supports " +
                      std::to_string(max_qubits));
  }

  std::vector<BoolExpr> data;
  for (const auto& e : c.entities.entities) data.push_back(entity_expression(e));
  std::vector<BoolExpr> searches;
  for (const auto& t : terms) searches.push_back(encode_term(c.codec, t, c.entities.entity_chars));
  c.expression = build_oracle_expression(std::move(data), std::move(searches));

  const auto qubits = static_cast<unsigned>(n);
  c.table = truth_table(c.expression, qubits);
  c.marked = c.table.count_ones();
  c.oracle = synthesize_phase_oracle(c.table);
  if (iterations && *iterations < 0) throw input_error("iteration override must be non-negative");
  c.iterations = iterations ? static_cast<unsigned>(*iterations) : iteration_count(qubits, c.marked);
  c.circuit = build_grover_circuit(c.oracle, static_cast<int>(c.iterations));
  c.expected = classical_match(dataset, terms);
  return c;
}

/// Independent 64-bit seed for (master, scenario, trial).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t scenario, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(scenario), static_cast<std::uint32_t>(trial)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

/// Runs `trials` independent noisy (or ideal) sampling runs of the compiled
/// circuit. With `reversed` the outcomes are labelled with qubit 0 rightmost.
inline std::vector<Histogram> run_trials(const CompiledSearch& c, const NoiseModel& noise, std::uint64_t shots,
                                         std::size_t trials, std::uint64_t seed, std::uint64_t scenario_index,
                                         bool reversed) {
  std::vector<Histogram> out;
  const Statevector ideal = simulate(c.circuit);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto s = derive_seed(seed, scenario_index, t);
    Histogram h = noise.is_ideal() ? measure(ideal, shots, s) : run_noisy(c.circuit, noise, shots, s);
    out.push_back(reversed ? reverse_readout(h) : std::move(h));
  }
  return out;
}

struct Scenario {
  std::string name;
  std::vector<std::string> terms;
};

/// The four-entity three-bit dataset used by the bundled scenarios.
inline std::vector<std::string> bundled_dataset() { return {"000", "010", "011", "111"}; }

/// No-match control, one match, two matches, plus the "*1*" substring reading
/// (three matches against the bundled data).
inline std::vector<Scenario> bundled_scenarios() {
  return {{"no_match", {"10*"}}, {"one_match", {"00*"}}, {"two_match", {"01*"}}, {"substring_1", {"*1*"}}};
}

}  // namespace qwild
