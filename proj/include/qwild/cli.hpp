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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwild/io.hpp"
#include "qwild/pipeline.hpp"

namespace qwild::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

inline constexpr std::uint64_t default_seed = 7;
inline constexpr std::uint64_t default_shots = 1024;
inline constexpr std::size_t default_trials = 6;
inline constexpr NoiseModel default_noise{0.001, 0.01, 0.02};

struct RunConfig {
  std::string data_path;
  std::vector<std::string> terms;
  std::string codec_path;
  std::uint64_t shots = default_shots;
  std::size_t trials = default_trials;
  std::uint64_t seed = default_seed;
  NoiseModel noise = default_noise;
  std::optional<int> iterations;
  bool reversed = true;
  bool emit_qasm = false;
  std::string out_dir;
  // Test hook: complements the oracle's truth table before synthesis.
  bool corrupt_oracle = false;

  void validate() const {
    if (shots < 1) throw input_error("--shots must be at least 1");
    if (trials < 1) throw input_error("--trials must be at least 1");
    noise.validate();
  }
};

inline NoiseModel parse_noise(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    char* end = nullptr;
    const double p = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size()) throw input_error("--noise expects p1,p2,readout");
    v.push_back(p);
  }
  if (v.size() != 3) throw input_error("--noise expects three comma-separated probabilities");
  NoiseModel m{v[0], v[1], v[2]};
  m.validate();
  return m;
}

namespace detail {

struct Workload {
  std::vector<std::string> dataset;
  std::optional<AlphabetCodec> codec;
  std::vector<Scenario> scenarios;
};

inline std::optional<AlphabetCodec> load_codec_opt(const RunConfig& cfg) {
  if (cfg.codec_path.empty()) return std::nullopt;
  return load_codec(cfg.codec_path);
}

// With --data the terms form one scenario; without it the bundled suite runs.
inline Workload workload(const RunConfig& cfg) {
  Workload w;
  w.codec = load_codec_opt(cfg);
  if (!cfg.data_path.empty()) {
    w.dataset = load_dataset(cfg.data_path);
    if (cfg.terms.empty()) throw input_error("--term is required with --data");
    w.scenarios.push_back({"custom", cfg.terms});
  } else {
    if (!cfg.terms.empty()) throw input_error("--term requires --data");
    w.dataset = bundled_dataset();
    w.scenarios = bundled_scenarios();
  }
  return w;
}

inline CompiledSearch compile(const RunConfig& cfg, const std::vector<std::string>& dataset,
                              const std::optional<AlphabetCodec>& codec, const std::vector<std::string>& terms) {
  auto c = compile_search(dataset, parse_terms(terms), codec, cfg.iterations);
  if (cfg.corrupt_oracle) {
    // Flip one row; complementing the whole table would only change the global phase.
    c.table.set(0, !c.table.get(0));
    c.oracle = synthesize_phase_oracle(c.table);
    c.circuit = build_grover_circuit(c.oracle, static_cast<int>(c.iterations));
  }
  return c;
}

inline std::vector<std::string> sorted_vector(const std::set<std::string>& s) { return {s.begin(), s.end()}; }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

inline void write_outputs(const RunConfig& cfg, const std::vector<std::pair<std::string, std::string>>& files) {
  if (cfg.out_dir.empty()) return;
  for (const auto& [name, content] : files) write_text_file_atomic(std::filesystem::path(cfg.out_dir) / name, content);
}

}  // namespace detail

inline int cmd_encode(const RunConfig& cfg, std::ostream& out) {
  if (cfg.data_path.empty()) throw input_error("encode requires --data");
  const auto dataset = load_dataset(cfg.data_path);
  auto codec_opt = detail::load_codec_opt(cfg);
  const AlphabetCodec codec = codec_opt ? *codec_opt : AlphabetCodec::from_dataset(dataset);
  const auto set = encode_dataset(codec, dataset);

  out << "width: " << codec.width() << "\ncode:";
  for (const auto& [ch, bits] : codec.code_map()) out << " " << ch << "=" << bits;
  out << "\nentities (" << set.entity_bit_length << " bits each):\n";
  json entities = json::array();
  for (const auto& e : set.entities) {
    const auto s = decode_entity(codec, e);
    out << "  " << s << " " << e.bits << "\n";
    entities.push_back(json{{"string", s}, {"bits", e.bits}});
  }
  if (set.duplicates_dropped) out << "warning: duplicate dataset entries were dropped\n";

  json doc{{"codec", codec_to_json(codec)},
           {"entity_bits", set.entity_bit_length},
           {"entities", entities},
           {"duplicates_dropped", set.duplicates_dropped}};
  detail::write_outputs(cfg, {{"encoding.json", doc.dump(2) + "\n"}});
  return ok;
}

inline int cmd_compile(const RunConfig& cfg, std::ostream& out) {
  if (cfg.data_path.empty()) throw input_error("compile requires --data");
  if (cfg.terms.empty()) throw input_error("compile requires at least one --term");
  const auto dataset = load_dataset(cfg.data_path);
  const auto c = detail::compile(cfg, dataset, detail::load_codec_opt(cfg), cfg.terms);
  const auto stats = gate_stats(c.circuit);
  const auto expr = render(c.expression);

  out << "expression: " << expr << "\n";
  out << "qubits: " << c.qubits() << "  marked: " << c.marked << "  iterations: " << c.iterations << "\n";
  out << "gates:";
  for (const auto& [k, v] : stats.counts) out << " " << k << "=" << v;
  out << "  depth: " << stats.depth << "\n";
  if (c.marked == 0) out << "warning: no entity matches the search terms; this is a control circuit\n";

  json doc{{"terms", cfg.terms},
           {"expression", expr},
           {"qubits", c.qubits()},
           {"marked", c.marked},
           {"iterations", c.iterations},
           {"oracle_stats", stats_to_json(gate_stats(c.oracle))},
           {"stats", stats_to_json(stats)}};
  std::vector<std::pair<std::string, std::string>> files{
      {"expression.txt", expr + "\n"},
      {"compile.json", doc.dump(2) + "\n"},
      {"oracle.json", circuit_to_json(c.oracle).dump(2) + "\n"},
      {"circuit.json", circuit_to_json(c.circuit).dump(2) + "\n"}};
  if (cfg.emit_qasm) {
    files.emplace_back("circuit.qasm", to_qasm(c.circuit));
    if (cfg.out_dir.empty()) out << to_qasm(c.circuit);
  }
  detail::write_outputs(cfg, files);
  return ok;
}

/// Noiseless pipeline: the m most probable basis states, decoded.
inline int cmd_search(const RunConfig& cfg, std::ostream& out) {
  if (cfg.data_path.empty()) throw input_error("search requires --data");
  if (cfg.terms.empty()) throw input_error("search requires at least one --term");
  const auto dataset = load_dataset(cfg.data_path);
  const auto c = detail::compile(cfg, dataset, detail::load_codec_opt(cfg), cfg.terms);
  const auto state = simulate(c.circuit);
  const auto probs = probabilities(state);

  std::vector<std::size_t> order(probs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::ranges::stable_sort(order, [&](std::size_t a, std::size_t b) { return probs[a] > probs[b]; });

  json matches = json::array();
  out << "qubits: " << c.qubits() << "  marked: " << c.marked << "  iterations: " << c.iterations << "\n";
  for (std::size_t i = 0; i < c.marked; ++i) {
    const auto label = index_to_bits(order[i], c.qubits());
    const auto shown = cfg.reversed ? reversed_bits(label) : label;
    const auto decoded = decode_results({shown}, c.codec, cfg.reversed).front();
    out << "  " << decoded << "  state " << shown << "  p=" << std::setprecision(6) << probs[order[i]] << "\n";
    matches.push_back(json{{"state", shown}, {"decoded", decoded}, {"probability", probs[order[i]]}});
  }
  json doc{{"terms", cfg.terms},
           {"qubits", c.qubits()},
           {"marked", c.marked},
           {"iterations", c.iterations},
           {"reversed", cfg.reversed},
           {"matches", matches}};
  if (c.marked == 0) {
    const std::string note = "no matches: the output distribution is uniform";
    out << note << "\n";
    doc["note"] = note;
  } else if (2 * c.marked > state.size()) {
    const std::string note = "more than half of all states are marked; amplification is ineffective";
    out << "note: " << note << "\n";
    doc["note"] = note;
  }
  detail::write_outputs(cfg, {{"search.json", doc.dump(2) + "\n"},
                              {"statevector.json", statevector_to_json(state).dump() + "\n"}});
  return ok;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.trials < 2) throw input_error("verify needs --trials of at least 2");
  const auto w = detail::workload(cfg);
  bool all_ok = true;
  json results = json::array();
  for (std::size_t si = 0; si < w.scenarios.size(); ++si) {
    const auto& sc = w.scenarios[si];
    const auto c = detail::compile(cfg, w.dataset, w.codec, sc.terms);
    const auto trials = run_trials(c, NoiseModel{}, cfg.shots, cfg.trials, cfg.seed, si, cfg.reversed);
    const auto report = consistency(trials, c.k());
    const auto verdict = verify_against_classical(report, c.expected, c.codec, cfg.reversed);
    all_ok = all_ok && verdict != Verdict::Fail;
    std::vector<std::string> decoded;
    if (report.consistent) {
      try {
        decoded = decode_results(detail::sorted_vector(report.states), c.codec, cfg.reversed);
      } catch (const input_error&) {
      }
    }
    out << sc.name << " [" << detail::join(sc.terms, " ") << "]: " << to_string(verdict) << "  expected {"
        << detail::join(detail::sorted_vector(c.expected), ",") << "} observed {" << detail::join(decoded, ",")
        << "}\n";
    results.push_back(json{{"scenario", sc.name},
                           {"terms", sc.terms},
                           {"expected", detail::sorted_vector(c.expected)},
                           {"verdict", to_string(verdict)},
                           {"report", report_to_json(report, decoded)}});
  }
  json doc{{"seed", cfg.seed}, {"shots", cfg.shots}, {"trials", cfg.trials}, {"scenarios", results}};
  detail::write_outputs(cfg, {{"verify.json", doc.dump(2) + "\n"}});
  return all_ok ? ok : verification_failed;
}

/// Noisy multi-trial runs of every scenario with the top-K consistency check.
inline int cmd_experiment(const RunConfig& cfg, std::ostream& out) {
  if (cfg.trials < 2) throw input_error("experiment needs --trials of at least 2 for the consistency check");
  const auto w = detail::workload(cfg);
  bool all_ok = true;
  std::string csv = "trial,scenario,top_states\n";
  json scenarios = json::array();
  json histograms = json::object();
  for (std::size_t si = 0; si < w.scenarios.size(); ++si) {
    const auto& sc = w.scenarios[si];
    const auto c = detail::compile(cfg, w.dataset, w.codec, sc.terms);
    const auto trials = run_trials(c, cfg.noise, cfg.shots, cfg.trials, cfg.seed, si, cfg.reversed);
    const auto report = consistency(trials, c.k());
    const auto verdict = verify_against_classical(report, c.expected, c.codec, cfg.reversed);
    all_ok = all_ok && verdict != Verdict::Fail;
    std::vector<std::string> decoded;
    if (report.consistent) {
      try {
        decoded = decode_results(detail::sorted_vector(report.states), c.codec, cfg.reversed);
      } catch (const input_error&) {
      }
    }

    out << sc.name << " [" << detail::join(sc.terms, " ") << "] k=" << report.k << "\n";
    for (std::size_t t = 0; t < report.trials.size(); ++t) {
      out << "  trial " << t + 1 << ":";
      for (const auto& rs : report.trials[t]) out << " " << rs.bits << " (" << format_probability(rs.probability) << ")";
      out << "\n";
    }
    out << "  verdict: " << (report.consistent ? "consistent" : "inconsistent") << "  check: " << to_string(verdict)
        << "\n";

    csv += report_csv_rows(report, sc.name);
    json hs = json::array();
    for (const auto& h : trials) hs.push_back(histogram_to_json(h));
    histograms[sc.name] = std::move(hs);
    scenarios.push_back(json{{"scenario", sc.name},
                             {"terms", sc.terms},
                             {"expected", detail::sorted_vector(c.expected)},
                             {"check", to_string(verdict)},
                             {"report", report_to_json(report, decoded)}});
  }
  json doc{{"seed", cfg.seed},
           {"shots", cfg.shots},
           {"trials", cfg.trials},
           {"noise", json{{"p1", cfg.noise.p1}, {"p2", cfg.noise.p2}, {"readout", cfg.noise.readout}}},
           {"reversed", cfg.reversed},
           {"scenarios", scenarios}};
  detail::write_outputs(cfg, {{"experiment.csv", csv},
                              {"report.json", doc.dump(2) + "\n"},
                              {"histograms.json", histograms.dump(2) + "\n"}});
  return all_ok ? ok : verification_failed;
}

/// Entry point shared by the qwild binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qwild: wildcard search compiled to Grover phase-oracle circuits"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string noise_text;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub, bool needs_terms) {
    sub->add_option("--data", cfg.data_path, "Dataset file, one string per line");
    if (needs_terms) sub->add_option("--term", cfg.terms, "Search term: ab* prefix, *ab suffix, *ab* substring");
    sub->add_option("--codec", cfg.codec_path, "Codec JSON {\"width\": w, \"code\": {...}}");
    sub->add_option("--out", cfg.out_dir, "Directory for output artifacts");
    sub->add_option("--iterations", cfg.iterations, "Override the Grover iteration count");
    sub->add_flag("--corrupt-oracle", cfg.corrupt_oracle)->group("");
  };
  auto* encode = app.add_subcommand("encode", "Print the codec and encoded entities");
  add_common(encode, false);
  auto* compile = app.add_subcommand("compile", "Build the oracle expression and circuit");
  add_common(compile, true);
  compile->add_flag("--emit-qasm", cfg.emit_qasm, "Also write OpenQASM 2.0");
  auto* search = app.add_subcommand("search", "Noiseless search; print decoded matches");
  add_common(search, true);
  search->add_flag("--no-reverse{false}", cfg.reversed, "Report states with qubit 0 leftmost");
  auto* verify = app.add_subcommand("verify", "Compare the quantum pipeline against classical matching");
  auto* experiment = app.add_subcommand("experiment", "Noisy multi-trial runs with top-K consistency");
  for (auto* sub : {verify, experiment}) {
    add_common(sub, true);
    sub->add_option("--shots", cfg.shots, "Shots per trial")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "Trials per scenario")->capture_default_str();
    sub->add_option("--seed", seed, "Master seed (default 7, or $GW_SEED)");
    sub->add_flag("--no-reverse{false}", cfg.reversed, "Report states with qubit 0 leftmost");
  }
  experiment->add_option("--noise", noise_text, "p1,p2,readout (default 0.001,0.01,0.02)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    if (seed) {
      cfg.seed = *seed;
    } else if (const char* env = std::getenv("GW_SEED"); env && *env) {
      char* end = nullptr;
      cfg.seed = std::strtoull(env, &end, 10);
      if (*end != '\0') throw input_error("GW_SEED must be an unsigned integer");
    }
    if (!noise_text.empty()) cfg.noise = parse_noise(noise_text);
    cfg.validate();

    if (encode->parsed()) return cmd_encode(cfg, out);
    if (compile->parsed()) return cmd_compile(cfg, out);
    if (search->parsed()) return cmd_search(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_experiment(cfg, out);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
}

}  // namespace qwild::cli
