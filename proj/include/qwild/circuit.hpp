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

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qwild/error.hpp"

namespace qwild {

enum class GateKind : std::uint8_t { H, X, Z, MCZ, GlobalPhaseFlip };

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::MCZ: return "mcz";
    case GateKind::GlobalPhaseFlip: return "gphase";
  }
  return "?";
}

/// A gate over qubit indices. MCZ negates the amplitudes whose bits are all
/// one on its qubit set; GlobalPhaseFlip multiplies the whole state by -1.
struct Gate {
  GateKind kind;
  std::vector<unsigned> qubits;

  static Gate h(unsigned q) { return {GateKind::H, {q}}; }
  static Gate x(unsigned q) { return {GateKind::X, {q}}; }
  static Gate z(unsigned q) { return {GateKind::Z, {q}}; }
  static Gate global_phase_flip() { return {GateKind::GlobalPhaseFlip, {}}; }

  static Gate mcz(std::vector<unsigned> qubits) {
    std::ranges::sort(qubits);
    if (qubits.size() < 2) throw input_error("mcz needs at least two qubits");
    if (std::ranges::adjacent_find(qubits) != qubits.end()) throw input_error("mcz qubits must be distinct");
    return {GateKind::MCZ, std::move(qubits)};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(unsigned qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count == 0) throw input_error("circuit needs at least one qubit");
  }

  unsigned qubit_count() const noexcept { return qubit_count_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  Circuit& add(Gate g) {
    const std::size_t expected = g.kind == GateKind::GlobalPhaseFlip ? 0 : g.kind == GateKind::MCZ ? 2 : 1;
    if (g.kind == GateKind::MCZ ? g.qubits.size() < expected : g.qubits.size() != expected) {
      throw input_error(std::string("gate '") + gate_name(g.kind) + "' has the wrong number of qubits");
    }
    for (unsigned q : g.qubits) {
      if (q >= qubit_count_) {
        throw input_error("qubit " + std::to_string(q) + " out of range for " + std::to_string(qubit_count_) +
                          "-qubit circuit");
      }
    }
    gates_.push_back(std::move(g));
    return *this;
  }

  Circuit& append(const Circuit& other) {
    if (other.qubit_count_ != qubit_count_) {
      throw input_error("cannot append a " + std::to_string(other.qubit_count_) + "-qubit circuit to a " +
                        std::to_string(qubit_count_) + "-qubit circuit");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned qubit_count_;
  std::vector<Gate> gates_;
};

struct GateStats {
  std::map<std::string, std::size_t> counts;
  std::map<std::size_t, std::size_t> mcz_arity;
  std::size_t depth = 0;

  friend bool operator==(const GateStats&, const GateStats&) = default;
};

/// Gate counts, MCZ arity histogram and greedy-layered depth.
inline GateStats gate_stats(const Circuit& c) {
  GateStats s;
  std::vector<std::size_t> level(c.qubit_count(), 0);
  for (const auto& g : c.gates()) {
    ++s.counts[gate_name(g.kind)];
    if (g.kind == GateKind::MCZ) ++s.mcz_arity[g.qubits.size()];
    if (g.qubits.empty()) continue;
    std::size_t layer = 0;
    for (unsigned q : g.qubits) layer = std::max(layer, level[q]);
    ++layer;
    for (unsigned q : g.qubits) level[q] = layer;
    s.depth = std::max(s.depth, layer);
  }
  return s;
}

}  // namespace qwild
