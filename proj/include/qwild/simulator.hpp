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
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qwild/circuit.hpp"
#include "qwild/error.hpp"
#include "qwild/truth_table.hpp"

namespace qwild {

using amplitude = std::complex<double>;

inline constexpr unsigned max_qubits = max_vars;

/// Dense state of n qubits. Basis index x has qubit 0 as its most
/// significant bit, matching TruthTable rows.
class Statevector {
 public:
  /// |0...0>
  explicit Statevector(unsigned qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count == 0 || qubit_count > max_qubits) {
      throw input_error("qubit count must be in [1, " + std::to_string(max_qubits) + "], got " +
                        std::to_string(qubit_count));
    }
    amps_.assign(std::size_t{1} << qubit_count, amplitude{0.0, 0.0});
    amps_[0] = 1.0;
  }

  unsigned qubit_count() const noexcept { return qubit_count_; }
  std::size_t size() const noexcept { return amps_.size(); }
  const std::vector<amplitude>& amplitudes() const noexcept { return amps_; }
  std::vector<amplitude>& amplitudes() noexcept { return amps_; }
  amplitude operator[](std::size_t x) const { return amps_[x]; }

  /// Index stride of a qubit (qubit 0 is the top bit).
  std::size_t stride(unsigned q) const { return std::size_t{1} << (qubit_count_ - 1 - q); }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  unsigned qubit_count_;
  std::vector<amplitude> amps_;
};

inline Statevector init_state(unsigned n) { return Statevector(n); }

enum class Pauli : std::uint8_t { X, Y, Z };

namespace detail {

template <class Pair>
void for_each_pair(Statevector& s, unsigned q, Pair&& f) {
  const std::size_t st = s.stride(q);
  auto& a = s.amplitudes();
  for (std::size_t base = 0; base < a.size(); base += 2 * st) {
    for (std::size_t i = base; i < base + st; ++i) f(a[i], a[i + st]);
  }
}

inline void check_qubit(const Statevector& s, unsigned q) {
  if (q >= s.qubit_count()) {
    throw input_error("qubit " + std::to_string(q) + " out of range for " + std::to_string(s.qubit_count()) +
                      "-qubit state");
  }
}

}  // namespace detail

inline void apply_pauli(Statevector& s, unsigned q, Pauli p) {
  detail::check_qubit(s, q);
  const amplitude i{0.0, 1.0};
  switch (p) {
    case Pauli::X: detail::for_each_pair(s, q, [](amplitude& a, amplitude& b) { std::swap(a, b); }); break;
    case Pauli::Y:
      detail::for_each_pair(s, q, [&](amplitude& a, amplitude& b) {
        const amplitude a0 = a;
        a = -i * b;
        b = i * a0;
      });
      break;
    case Pauli::Z: detail::for_each_pair(s, q, [](amplitude&, amplitude& b) { b = -b; }); break;
  }
}

inline void apply_gate(Statevector& s, const Gate& g) {
  for (unsigned q : g.qubits) detail::check_qubit(s, q);
  switch (g.kind) {
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      detail::for_each_pair(s, g.qubits.front(), [r](amplitude& a, amplitude& b) {
        const amplitude a0 = a;
        a = (a0 + b) * r;
        b = (a0 - b) * r;
      });
      break;
    }
    case GateKind::X: apply_pauli(s, g.qubits.front(), Pauli::X); break;
    case GateKind::Z: apply_pauli(s, g.qubits.front(), Pauli::Z); break;
    case GateKind::MCZ: {
      std::size_t mask = 0;
      for (unsigned q : g.qubits) mask |= s.stride(q);
      auto& a = s.amplitudes();
      for (std::size_t x = 0; x < a.size(); ++x) {
        if ((x & mask) == mask) a[x] = -a[x];
      }
      break;
    }
    case GateKind::GlobalPhaseFlip:
      for (auto& a : s.amplitudes()) a = -a;
      break;
  }
}

/// Multiplies amplitude x by (-1)^t(x); the direct diagonal form of a phase oracle.
inline void apply_diagonal_oracle(Statevector& s, const TruthTable& t) {
  if (t.var_count() != s.qubit_count()) {
    throw input_error("oracle has " + std::to_string(t.var_count()) + " variables, state has " +
                      std::to_string(s.qubit_count()) + " qubits");
  }
  auto& a = s.amplitudes();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (t.get(x)) a[x] = -a[x];
  }
}

/// Runs `c` from |0...0>, calling `after_gate(state, gate)` after each gate.
template <class Observer>
Statevector simulate(const Circuit& c, Observer&& after_gate) {
  Statevector s(c.qubit_count());
  for (const auto& g : c.gates()) {
    apply_gate(s, g);
    after_gate(static_cast<const Statevector&>(s), g);
  }
  return s;
}

inline Statevector simulate(const Circuit& c) {
  return simulate(c, [](const Statevector&, const Gate&) {});
}

inline std::vector<double> probabilities(const Statevector& s) {
  std::vector<double> p(s.size());
  std::ranges::transform(s.amplitudes(), p.begin(), [](const amplitude& a) { return std::norm(a); });
  return p;
}

struct Histogram {
  unsigned bits = 0;
  std::uint64_t shots = 0;
  /// Outcome bit string (qubit 0 leftmost) -> count; zero counts are omitted.
  std::map<std::string, std::uint64_t> counts;

  std::uint64_t count(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
  }

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct NoiseModel {
  double p1 = 0.0;       // depolarizing probability after 1-qubit gates
  double p2 = 0.0;       // per-qubit depolarizing probability after multi-qubit gates
  double readout = 0.0;  // independent classical flip per measured bit

  void validate() const {
    for (double p : {p1, p2, readout}) {
      if (!(p >= 0.0 && p <= 1.0)) throw input_error("noise probabilities must lie in [0, 1]");
    }
  }

  bool is_ideal() const { return p1 == 0.0 && p2 == 0.0 && readout == 0.0; }

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

namespace detail {

// Shot i always draws from its own generator seeded by (seed, i), so the
// outcome of one shot never depends on how many draws another one made.
inline std::mt19937_64 shot_stream(std::uint64_t seed, std::uint64_t shot) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shot), static_cast<std::uint32_t>(shot >> 32)};
  return std::mt19937_64(seq);
}

// 53-bit uniform in [0, 1); unlike std::uniform_real_distribution this is
// identical across standard libraries.
inline double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

class Sampler {
 public:
  explicit Sampler(const std::vector<double>& probs) : cumulative_(probs.size()) {
    double acc = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
      acc += probs[x];
      cumulative_[x] = acc;
      if (probs[x] > 0.0) last_nonzero_ = x;
    }
  }

  std::size_t draw(double u) const {
    const double target = u * cumulative_.back();
    auto it = std::ranges::upper_bound(cumulative_, target);
    if (it == cumulative_.end()) return last_nonzero_;
    return static_cast<std::size_t>(it - cumulative_.begin());
  }

 private:
  std::vector<double> cumulative_;
  std::size_t last_nonzero_ = 0;
};

}  // namespace detail

/// Samples `shots` outcomes from the Born distribution of `s`.
inline Histogram measure(const Statevector& s, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw input_error("shots must be at least 1");
  const detail::Sampler sampler(probabilities(s));
  Histogram h{s.qubit_count(), shots, {}};
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    auto rng = detail::shot_stream(seed, shot);
    ++h.counts[index_to_bits(sampler.draw(detail::uniform01(rng)), s.qubit_count())];
  }
  return h;
}

/// Monte Carlo trajectories: one pass per shot with random Pauli errors.
///
/// After every gate each touched qubit independently suffers X, Y or Z with
/// probability p/3 each (p = p1 for one-qubit gates, p2 otherwise). The
/// sampled outcome then has each bit flipped with probability `readout`.
/// With an all-zero model the result equals measure() on the ideal state
/// for the same seed.
inline Histogram run_noisy(const Circuit& c, const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed) {
  noise.validate();
  if (shots == 0) throw input_error("shots must be at least 1");
  const unsigned n = c.qubit_count();
  const detail::Sampler ideal(probabilities(simulate(c)));

  struct Fault {
    std::size_t after_gate;
    unsigned qubit;
    Pauli pauli;
  };
  std::vector<Fault> faults;

  Histogram h{n, shots, {}};
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    auto rng = detail::shot_stream(seed, shot);
    // Fault draws do not depend on the state, so they are made up front and
    // fault-free shots sample straight from the ideal distribution.
    faults.clear();
    for (std::size_t gi = 0; gi < c.size(); ++gi) {
      const auto& g = c.gates()[gi];
      if (g.qubits.empty()) continue;
      const double p = g.qubits.size() == 1 ? noise.p1 : noise.p2;
      if (p <= 0.0) continue;
      for (unsigned q : g.qubits) {
        const double u = detail::uniform01(rng);
        if (u < p) {
          const auto which = std::min(2, static_cast<int>(u * 3.0 / p));
          faults.push_back({gi, q, static_cast<Pauli>(which)});
        }
      }
    }

    std::size_t outcome = 0;
    if (faults.empty()) {
      outcome = ideal.draw(detail::uniform01(rng));
    } else {
      Statevector s(n);
      auto next = faults.begin();
      for (std::size_t gi = 0; gi < c.size(); ++gi) {
        apply_gate(s, c.gates()[gi]);
        for (; next != faults.end() && next->after_gate == gi; ++next) apply_pauli(s, next->qubit, next->pauli);
      }
      outcome = detail::Sampler(probabilities(s)).draw(detail::uniform01(rng));
    }

    if (noise.readout > 0.0) {
      for (unsigned q = 0; q < n; ++q) {
        if (detail::uniform01(rng) < noise.readout) outcome ^= std::size_t{1} << (n - 1 - q);
      }
    }
    ++h.counts[index_to_bits(outcome, n)];
  }
  return h;
}

}  // namespace qwild
