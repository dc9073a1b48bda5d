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

#include <cmath>
#include <numbers>
#include <string>

#include "qwild/anf.hpp"
#include "qwild/circuit.hpp"
#include "qwild/error.hpp"
#include "qwild/truth_table.hpp"

namespace qwild {

/// Phase oracle realizing |x> -> (-1)^f(x) |x> exactly, global phase included.
///
/// Each ANF monomial of f contributes one gate: the constant term becomes
/// GlobalPhaseFlip, a single variable Z, and a product MCZ.
inline Circuit synthesize_phase_oracle(const TruthTable& t) {
  if (t.var_count() == 0) throw input_error("phase oracle needs at least one variable");
  Circuit c(t.var_count());
  for (const auto& m : anf(t).monomials) {
    if (m.empty()) {
      c.add(Gate::global_phase_flip());
    } else if (m.size() == 1) {
      c.add(Gate::z(m.front()));
    } else {
      c.add(Gate::mcz(m));
    }
  }
  return c;
}

/// 2|s><s| - I over n qubits as an exact matrix identity.
inline Circuit build_diffusion(unsigned n) {
  Circuit c(n);
  for (unsigned q = 0; q < n; ++q) c.add(Gate::h(q));
  for (unsigned q = 0; q < n; ++q) c.add(Gate::x(q));
  if (n == 1) {
    c.add(Gate::z(0));
  } else {
    std::vector<unsigned> all(n);
    for (unsigned q = 0; q < n; ++q) all[q] = q;
    c.add(Gate::mcz(std::move(all)));
  }
  for (unsigned q = 0; q < n; ++q) c.add(Gate::x(q));
  for (unsigned q = 0; q < n; ++q) c.add(Gate::h(q));
  c.add(Gate::global_phase_flip());
  return c;
}

/// Grover rounds for m marked states out of 2^n: floor(pi/4 * sqrt(2^n/m)),
/// at least one. With m = 0 a single round still runs (control circuits).
inline unsigned iteration_count(unsigned n, std::size_t m) {
  const double space = std::ldexp(1.0, static_cast<int>(n));
  if (static_cast<double>(m) > space) {
    throw input_error("marked count " + std::to_string(m) + " exceeds the " + std::to_string(n) + "-qubit space");
  }
  if (m == 0) return 1;
  const double k = std::floor(std::numbers::pi / 4.0 * std::sqrt(space / static_cast<double>(m)));
  return std::max(1u, static_cast<unsigned>(k));
}

/// H on every qubit followed by `iterations` rounds of (oracle, diffusion).
inline Circuit build_grover_circuit(const Circuit& oracle, int iterations) {
  if (iterations < 0) throw input_error("iteration count must be non-negative");
  const unsigned n = oracle.qubit_count();
  Circuit c(n);
  for (unsigned q = 0; q < n; ++q) c.add(Gate::h(q));
  const Circuit diffusion = build_diffusion(n);
  for (int i = 0; i < iterations; ++i) {
    c.append(oracle);
    c.append(diffusion);
  }
  return c;
}

}  // namespace qwild
