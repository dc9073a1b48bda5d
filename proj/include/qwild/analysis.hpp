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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qwild/encoding.hpp"
#include "qwild/error.hpp"
#include "qwild/simulator.hpp"
#include "qwild/truth_table.hpp"

namespace qwild {

struct RankedState {
  std::string bits;
  double probability = 0.0;

  friend bool operator==(const RankedState&, const RankedState&) = default;
};

/// The k most frequent outcomes, by descending count then ascending bit string.
/// States never observed rank after all observed ones.
inline std::vector<RankedState> top_k(const Histogram& h, std::size_t k) {
  const std::size_t space = std::size_t{1} << h.bits;
  if (k < 1 || k > space) {
    throw input_error("k must be in [1, " + std::to_string(space) + "], got " + std::to_string(k));
  }
  std::vector<std::pair<std::uint64_t, std::string>> seen;
  for (const auto& [bits, n] : h.counts) {
    if (n > 0) seen.emplace_back(n, bits);
  }
  std::ranges::sort(seen, [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<RankedState> out;
  for (const auto& [n, bits] : seen) {
    if (out.size() == k) break;
    out.push_back({bits, static_cast<double>(n) / static_cast<double>(h.shots)});
  }
  for (std::size_t x = 0; out.size() < k && x < space; ++x) {
    auto bits = index_to_bits(x, h.bits);
    if (h.count(bits) == 0) out.push_back({std::move(bits), 0.0});
  }
  return out;
}

/// Outcome of the multi-trial top-K consistency heuristic.
struct TrialReport {
  std::size_t k = 1;
  unsigned bits = 0;
  std::vector<std::vector<RankedState>> trials;
  std::vector<std::set<std::string>> trial_sets;
  bool consistent = false;
  /// The shared top-k set when consistent, empty otherwise.
  std::set<std::string> states;
  double mean_mass = 0.0;
  double mass_threshold = 0.0;
};

/// Consistent iff every trial has the same top-k set S and the mean
/// probability mass on S is above `mass_factor` times the uniform mass k/2^n.
inline TrialReport consistency(const std::vector<Histogram>& trials, std::size_t k, double mass_factor = 1.0) {
  if (trials.size() < 2) throw input_error("consistency needs at least two trials");
  TrialReport r;
  r.k = k;
  r.bits = trials.front().bits;
  for (const auto& h : trials) {
    if (h.bits != r.bits) throw input_error("trials have different bit widths");
    auto ranked = top_k(h, k);
    std::set<std::string> s;
    for (const auto& rs : ranked) s.insert(rs.bits);
    r.trials.push_back(std::move(ranked));
    r.trial_sets.push_back(std::move(s));
  }

  const bool same = std::ranges::all_of(r.trial_sets, [&](const auto& s) { return s == r.trial_sets.front(); });
  // Each trial's mass on its own top-k set, summed in sorted order so the
  // result is independent of trial order.
  std::vector<double> masses;
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const auto& h = trials[i];
    std::uint64_t hits = 0;
    for (const auto& bits : r.trial_sets[i]) hits += h.count(bits);
    masses.push_back(static_cast<double>(hits) / static_cast<double>(h.shots));
  }
  std::ranges::sort(masses);
  double total = 0.0;
  for (double m : masses) total += m;
  r.mean_mass = total / static_cast<double>(masses.size());
  r.mass_threshold = mass_factor * static_cast<double>(k) / static_cast<double>(std::size_t{1} << r.bits);
  r.consistent = same && r.mean_mass > r.mass_threshold + 1e-12;
  if (r.consistent) r.states = r.trial_sets.front();
  return r;
}

inline std::string reversed_bits(std::string bits) {
  std::ranges::reverse(bits);
  return bits;
}

/// Relabels every outcome with its bit order reversed (qubit 0 rightmost).
inline Histogram reverse_readout(const Histogram& h) {
  Histogram out{h.bits, h.shots, {}};
  for (const auto& [bits, n] : h.counts) out.counts[reversed_bits(bits)] += n;
  return out;
}

inline std::vector<std::string> decode_results(const std::vector<std::string>& states, const AlphabetCodec& codec,
                                               bool reversed) {
  std::vector<std::string> out;
  for (const auto& s : states) {
    const std::string bits = reversed ? reversed_bits(s) : s;
    if (bits.empty() || bits.size() % codec.width() != 0) {
      throw input_error("state '" + s + "' does not split into " + std::to_string(codec.width()) + "-bit segments");
    }
    out.push_back(decode_entity(codec, BinaryEntity{bits, codec.width()}));
  }
  return out;
}

enum class Verdict { Pass, Fail, ControlPass };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::ControlPass: return "CONTROL_PASS";
  }
  return "?";
}

inline Verdict verify_against_classical(const TrialReport& report, const std::set<std::string>& expected,
                                        const AlphabetCodec& codec, bool reversed) {
  if (expected.empty()) return report.consistent ? Verdict::Fail : Verdict::ControlPass;
  if (!report.consistent) return Verdict::Fail;
  try {
    const auto decoded = decode_results({report.states.begin(), report.states.end()}, codec, reversed);
    return std::set<std::string>(decoded.begin(), decoded.end()) == expected ? Verdict::Pass : Verdict::Fail;
  } catch (const input_error&) {
    return Verdict::Fail;
  }
}

}  // namespace qwild
