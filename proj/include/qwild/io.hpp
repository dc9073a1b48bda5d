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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwild/analysis.hpp"
#include "qwild/circuit.hpp"
#include "qwild/encoding.hpp"
#include "qwild/error.hpp"
#include "qwild/simulator.hpp"

namespace qwild {

using json = nlohmann::ordered_json;

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes via a sibling temporary and rename so readers never see partial files.
inline void write_text_file_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw input_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw input_error("failed writing '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

/// One string per line; blank (whitespace-only) lines are skipped, CR stripped.
inline std::vector<std::string> parse_dataset(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(line);
  }
  if (out.empty()) throw input_error("dataset has no entries");
  return out;
}

inline std::vector<std::string> load_dataset(const std::filesystem::path& path) {
  return parse_dataset(read_text_file(path));
}

// ---- codec --------------------------------------------------------------

inline json codec_to_json(const AlphabetCodec& codec) {
  json code = json::object();
  for (const auto& [ch, bits] : codec.code_map()) code[ch] = bits;
  return json{{"width", codec.width()}, {"code", code}};
}

inline AlphabetCodec codec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("code") || !j["code"].is_object()) {
    throw input_error("codec JSON must be an object with a \"code\" object");
  }
  std::map<std::string, std::string> code;
  for (const auto& [ch, bits] : j["code"].items()) {
    if (!bits.is_string()) throw input_error("codec code for '" + ch + "' must be a string");
    code[ch] = bits.get<std::string>();
  }
  auto codec = AlphabetCodec::from_map(code);
  if (j.contains("width")) {
    if (!j["width"].is_number_integer() || j["width"].get<long>() != static_cast<long>(codec.width())) {
      throw input_error("codec \"width\" does not match its code lengths");
    }
  }
  return codec;
}

inline AlphabetCodec load_codec(const std::filesystem::path& path) {
  try {
    return codec_from_json(json::parse(read_text_file(path)));
  } catch (const json::exception& e) {
    throw input_error("invalid codec file '" + path.string() + "': " + e.what());
  }
}

// ---- circuit ------------------------------------------------------------

inline json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates()) {
    json jg{{"g", gate_name(g.kind)}};
    if (g.kind != GateKind::GlobalPhaseFlip) jg["q"] = g.qubits;
    gates.push_back(std::move(jg));
  }
  return json{{"qubits", c.qubit_count()}, {"gates", std::move(gates)}};
}

inline Circuit circuit_from_json(const json& j) {
  try {
    Circuit c(j.at("qubits").get<unsigned>());
    for (const auto& jg : j.at("gates")) {
      const auto name = jg.at("g").get<std::string>();
      const auto qs = jg.contains("q") ? jg["q"].get<std::vector<unsigned>>() : std::vector<unsigned>{};
      if (name == "h" && qs.size() == 1) {
        c.add(Gate::h(qs[0]));
      } else if (name == "x" && qs.size() == 1) {
        c.add(Gate::x(qs[0]));
      } else if (name == "z" && qs.size() == 1) {
        c.add(Gate::z(qs[0]));
      } else if (name == "mcz") {
        c.add(Gate::mcz(qs));
      } else if (name == "gphase" && qs.empty()) {
        c.add(Gate::global_phase_flip());
      } else {
        throw input_error("unknown or malformed gate '" + name + "'");
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid circuit JSON: ") + e.what());
  }
}

inline json stats_to_json(const GateStats& s) {
  json counts = json::object();
  for (const auto& [k, v] : s.counts) counts[k] = v;
  json arity = json::object();
  for (const auto& [k, v] : s.mcz_arity) arity[std::to_string(k)] = v;
  return json{{"counts", counts}, {"mcz_arity", arity}, {"depth", s.depth}};
}

/// OpenQASM 2.0 text. MCZ on three or more qubits becomes an opaque gate
/// `mczK`; the global phase flip has no QASM 2.0 form and is kept as a comment.
inline std::string to_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  std::set<std::size_t> arities;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::MCZ && g.qubits.size() >= 3) arities.insert(g.qubits.size());
  }
  for (auto k : arities) {
    out << "// mcz" << k << ": Z on the all-ones subspace of " << k << " qubits\n";
    out << "opaque mcz" << k << " ";
    for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << "q" << i;
    out << ";\n";
  }
  out << "qreg q[" << c.qubit_count() << "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Z: out << gate_name(g.kind) << " q[" << g.qubits[0] << "];\n"; break;
      case GateKind::MCZ:
        out << (g.qubits.size() == 2 ? std::string("cz") : "mcz" + std::to_string(g.qubits.size())) << " ";
        for (std::size_t i = 0; i < g.qubits.size(); ++i) out << (i ? "," : "") << "q[" << g.qubits[i] << "]";
        out << ";\n";
        break;
      case GateKind::GlobalPhaseFlip: out << "// gphase: global phase -1\n"; break;
    }
  }
  return out.str();
}

// ---- simulator outputs --------------------------------------------------

inline json histogram_to_json(const Histogram& h) {
  json counts = json::object();
  for (const auto& [bits, n] : h.counts) counts[bits] = n;
  return json{{"shots", h.shots}, {"counts", counts}};
}

inline Histogram histogram_from_json(const json& j) {
  try {
    Histogram h;
    h.shots = j.at("shots").get<std::uint64_t>();
    std::uint64_t total = 0;
    for (const auto& [bits, n] : j.at("counts").items()) {
      if (h.bits == 0) h.bits = static_cast<unsigned>(bits.size());
      if (bits.size() != h.bits || bits.find_first_not_of("01") != std::string::npos) {
        throw input_error("histogram key '" + bits + "' is not a " + std::to_string(h.bits) + "-bit string");
      }
      h.counts[bits] = n.get<std::uint64_t>();
      total += h.counts[bits];
    }
    if (total != h.shots) throw input_error("histogram counts do not sum to shots");
    return h;
  } catch (const json::exception& e) {
    throw input_error(std::string("invalid histogram JSON: ") + e.what());
  }
}

inline json statevector_to_json(const Statevector& s) {
  json out = json::array();
  for (const auto& a : s.amplitudes()) out.push_back(json::array({a.real() + 0.0, a.imag() + 0.0}));  // no -0.0
  return out;
}

// ---- analysis outputs ---------------------------------------------------

inline json report_to_json(const TrialReport& r, const std::vector<std::string>& decoded) {
  json trials = json::array();
  for (const auto& t : r.trials) {
    json row = json::array();
    for (const auto& rs : t) row.push_back(json::array({rs.bits, rs.probability}));
    trials.push_back(std::move(row));
  }
  return json{{"k", r.k},
              {"trials", std::move(trials)},
              {"verdict", r.consistent ? "consistent" : "inconsistent"},
              {"states", std::vector<std::string>(r.states.begin(), r.states.end())},
              {"decoded", decoded}};
}

inline std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", p);
  return buf;
}

/// Rows shaped like per-trial result tables: "trial,scenario,top_states".
inline std::string report_csv_rows(const TrialReport& r, const std::string& scenario) {
  std::string out;
  for (std::size_t t = 0; t < r.trials.size(); ++t) {
    std::string cell;
    for (const auto& rs : r.trials[t]) {
      if (!cell.empty()) cell += ", ";
      cell += rs.bits + " (" + format_probability(rs.probability) + ")";
    }
    out += std::to_string(t + 1) + "," + scenario + ",\"" + cell + "\"\n";
  }
  return out;
}

}  // namespace qwild
