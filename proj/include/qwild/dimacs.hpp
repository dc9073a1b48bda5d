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

#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwild/boolexpr.hpp"
#include "qwild/error.hpp"

namespace qwild {

struct CnfFormula {
  BoolExpr expr;
  unsigned var_count = 0;
};

/// Reads DIMACS CNF. Variable k maps to x{k-1}; a negative literal becomes ~x.
///
/// Comment lines start with 'c'. A line holding only '%' ends the clause
/// section (SATLIB convention).
inline CnfFormula parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  bool have_header = false;
  long declared_vars = 0;
  long declared_clauses = 0;
  std::vector<BoolExpr> clauses;
  std::vector<BoolExpr> current;
  bool open_clause = false;

  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;
    if (line[first] == 'p') {
      if (have_header) throw parse_error("duplicate problem line", line_start + first);
      std::istringstream hdr(line.substr(first));
      std::string p, fmt, extra;
      if (!(hdr >> p >> fmt >> declared_vars >> declared_clauses) || p != "p" || fmt != "cnf" || (hdr >> extra) ||
          declared_vars < 0 || declared_clauses < 0) {
        throw parse_error("malformed problem line, expected 'p cnf <vars> <clauses>'", line_start + first);
      }
      if (declared_vars > static_cast<long>(max_vars)) {
        throw parse_error("at most " + std::to_string(max_vars) + " variables are supported", line_start + first);
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error("clause before problem line", line_start + first);

    std::size_t pos = first;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
      if (pos >= line.size()) break;
      const std::size_t tok_start = pos;
      while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
      const std::string tok = line.substr(tok_start, pos - tok_start);
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw parse_error("invalid literal '" + tok + "'", line_start + tok_start);
      if (lit == 0) {
        clauses.push_back(BoolExpr::any_of(std::move(current)));
        current.clear();
        open_clause = false;
        continue;
      }
      const long var = lit < 0 ? -lit : lit;
      if (var > declared_vars) {
        throw parse_error("literal " + tok + " exceeds declared variable count " + std::to_string(declared_vars),
                          line_start + tok_start);
      }
      current.push_back(BoolExpr::literal(static_cast<unsigned>(var - 1), lit > 0));
      open_clause = true;
    }
  }
  if (!have_header) throw parse_error("missing problem line", 0);
  if (open_clause) throw parse_error("last clause is not terminated by 0", offset);
  if (static_cast<long>(clauses.size()) != declared_clauses) {
    throw parse_error("header declares " + std::to_string(declared_clauses) + " clauses but " +
                          std::to_string(clauses.size()) + " were read",
                      offset);
  }
  return {BoolExpr::all_of(std::move(clauses)), static_cast<unsigned>(declared_vars)};
}

}  // namespace qwild
