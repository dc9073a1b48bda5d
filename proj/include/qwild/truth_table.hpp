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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qwild/error.hpp"

namespace qwild {

/// Largest variable count a truth table (and hence a register) may have.
inline constexpr unsigned max_vars = 24;

/// Boolean function of `var_count` inputs stored as 2^n packed bits.
///
/// Row `x` holds f(x0, ..., x{n-1}) where x0 is the most significant bit
/// of `x`. This is the same ordering the simulator uses for basis states.
class TruthTable {
 public:
  TruthTable() : TruthTable(0) {}

  explicit TruthTable(unsigned var_count) : var_count_(var_count) {
    if (var_count > max_vars) {
      throw input_error("truth table supports at most " + std::to_string(max_vars) + " variables");
    }
    words_.assign(word_count(var_count), 0);
  }

  /// Projection function f(x) = x_var.
  static TruthTable projection(unsigned var_count, unsigned var) {
    if (var >= var_count) {
      throw input_error("variable x" + std::to_string(var) + " out of range for " +
                        std::to_string(var_count) + " variables");
    }
    static constexpr std::uint64_t patterns[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    TruthTable t(var_count);
    const unsigned pos = var_count - 1 - var;
    for (std::size_t w = 0; w < t.words_.size(); ++w) {
      if (pos < 6) {
        t.words_[w] = patterns[pos];
      } else {
        t.words_[w] = ((w >> (pos - 6)) & 1u) ? ~0ull : 0ull;
      }
    }
    t.mask();
    return t;
  }

  static TruthTable constant(unsigned var_count, bool value) {
    TruthTable t(var_count);
    if (value) {
      for (auto& w : t.words_) w = ~0ull;
      t.mask();
    }
    return t;
  }

  /// Parses a row string such as "0001" (row 0 first).
  static TruthTable from_string(const std::string& rows) {
    if (rows.empty() || !std::has_single_bit(rows.size())) {
      throw input_error("truth table string length must be a power of two");
    }
    TruthTable t(static_cast<unsigned>(std::countr_zero(rows.size())));
    for (std::size_t x = 0; x < rows.size(); ++x) {
      if (rows[x] != '0' && rows[x] != '1') throw input_error("truth table rows must be 0 or 1");
      t.set(x, rows[x] == '1');
    }
    return t;
  }

  unsigned var_count() const noexcept { return var_count_; }
  std::size_t size() const noexcept { return std::size_t{1} << var_count_; }

  bool get(std::size_t row) const { return (words_[row >> 6] >> (row & 63)) & 1u; }

  void set(std::size_t row, bool value) {
    const std::uint64_t bit = 1ull << (row & 63);
    if (value) {
      words_[row >> 6] |= bit;
    } else {
      words_[row >> 6] &= ~bit;
    }
  }

  /// Number of rows with f(x) = 1, i.e. the marked-state count m.
  std::size_t count_ones() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < size(); ++x) {
      if (get(x)) out.push_back(x);
    }
    return out;
  }

  std::string to_string() const {
    std::string s(size(), '0');
    for (std::size_t x = 0; x < size(); ++x) {
      if (get(x)) s[x] = '1';
    }
    return s;
  }

  TruthTable& operator&=(const TruthTable& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  TruthTable& operator|=(const TruthTable& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  TruthTable& operator^=(const TruthTable& o) { return combine(o, [](auto a, auto b) { return a ^ b; }); }

  friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }

  friend TruthTable operator~(TruthTable a) {
    for (auto& w : a.words_) w = ~w;
    a.mask();
    return a;
  }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  static std::size_t word_count(unsigned n) { return n <= 6 ? 1 : (std::size_t{1} << (n - 6)); }

  void mask() {
    if (var_count_ < 6) words_[0] &= (1ull << (1u << var_count_)) - 1;
  }

  template <class Op>
  TruthTable& combine(const TruthTable& o, Op op) {
    if (o.var_count_ != var_count_) throw input_error("truth table variable counts differ");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = op(words_[w], o.words_[w]);
    return *this;
  }

  unsigned var_count_;
  std::vector<std::uint64_t> words_;
};

/// Splits a row index into its assignment bits, x0 first.
inline std::vector<std::uint8_t> row_bits(std::size_t row, unsigned var_count) {
  std::vector<std::uint8_t> bits(var_count);
  for (unsigned j = 0; j < var_count; ++j) bits[j] = (row >> (var_count - 1 - j)) & 1u;
  return bits;
}

/// Renders a basis index as an n-character bit string, x0 leftmost.
inline std::string index_to_bits(std::size_t index, unsigned width) {
  std::string s(width, '0');
  for (unsigned j = 0; j < width; ++j) {
    if ((index >> (width - 1 - j)) & 1u) s[j] = '1';
  }
  return s;
}

inline std::size_t bits_to_index(const std::string& bits) {
  std::size_t x = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw input_error("bit string '" + bits + "' contains a non-binary character");
    x = (x << 1) | static_cast<std::size_t>(c == '1');
  }
  return x;
}

}  // namespace qwild
