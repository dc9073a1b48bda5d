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
#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qwild/boolexpr.hpp"
#include "qwild/error.hpp"
#include "qwild/utf8.hpp"

namespace qwild {

/// Bijective fixed-width code between characters and bit strings.
///
/// A "character" is one UTF-8 code point. Each one maps to a segment of
/// exactly `width()` bits. With alphabets that are not a power of two some
/// segments stay unassigned and cannot be decoded.
class AlphabetCodec {
 public:
  /// Assigns codes 0, 1, 2, ... in sorted character order at the minimal width.
  static AlphabetCodec from_dataset(const std::vector<std::string>& dataset) {
    if (dataset.empty()) throw input_error("dataset is empty");
    std::set<std::string> alphabet;
    for (const auto& s : dataset) {
      for (auto& c : split_chars(s)) alphabet.insert(std::move(c));
    }
    if (alphabet.empty()) throw input_error("dataset contains no characters");
    const unsigned width = std::max(1u, static_cast<unsigned>(std::bit_width(alphabet.size() - 1)));
    std::map<std::string, std::string> code;
    std::size_t next = 0;
    for (const auto& c : alphabet) code.emplace(c, index_to_bits(next++, width));
    return AlphabetCodec(std::move(code), width);
  }

  /// Wraps an explicit character -> bits map after validating it.
  static AlphabetCodec from_map(const std::map<std::string, std::string>& code) {
    if (code.empty()) throw input_error("codec map is empty");
    const std::size_t width = code.begin()->second.size();
    if (width == 0) throw input_error("codec codes must be at least one bit wide");
    std::set<std::string> seen;
    for (const auto& [ch, bits] : code) {
      if (split_chars(ch).size() != 1) throw input_error("codec key '" + ch + "' is not a single character");
      if (bits.size() != width) {
        throw input_error("codec codes have non-uniform widths (" + std::to_string(width) + " and " +
                          std::to_string(bits.size()) + ")");
      }
      if (bits.find_first_not_of("01") != std::string::npos) {
        throw input_error("codec code '" + bits + "' is not a bit string");
      }
      if (!seen.insert(bits).second) throw input_error("duplicate codec code '" + bits + "'");
    }
    return AlphabetCodec(code, static_cast<unsigned>(width));
  }

  unsigned width() const noexcept { return width_; }

  std::vector<std::string> symbols() const {
    std::vector<std::string> out;
    for (const auto& [ch, bits] : code_) out.push_back(ch);
    return out;
  }

  const std::map<std::string, std::string>& code_map() const noexcept { return code_; }

  bool contains(const std::string& ch) const { return code_.contains(ch); }

  const std::string& code(const std::string& ch) const {
    auto it = code_.find(ch);
    if (it == code_.end()) throw input_error("character '" + ch + "' is not in the codec alphabet");
    return it->second;
  }

  std::optional<std::string> symbol_for(const std::string& bits) const {
    auto it = inverse_.find(bits);
    if (it == inverse_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const AlphabetCodec& a, const AlphabetCodec& b) {
    return a.width_ == b.width_ && a.code_ == b.code_;
  }

 private:
  AlphabetCodec(std::map<std::string, std::string> code, unsigned width) : code_(std::move(code)), width_(width) {
    for (const auto& [ch, bits] : code_) inverse_.emplace(bits, ch);
  }

  std::map<std::string, std::string> code_;
  std::map<std::string, std::string> inverse_;
  unsigned width_;
};

/// One encoded string: concatenated segments, leftmost character first.
struct BinaryEntity {
  std::string bits;
  unsigned segment_width = 1;

  std::size_t char_count() const { return bits.size() / segment_width; }

  friend bool operator==(const BinaryEntity&, const BinaryEntity&) = default;
};

struct BinaryEntitySet {
  std::vector<BinaryEntity> entities;
  std::size_t entity_bit_length = 0;
  std::size_t entity_chars = 0;
  bool duplicates_dropped = false;
};

enum class TermKind { Prefix, Suffix, Substring, Exact };

inline const char* to_string(TermKind kind) {
  switch (kind) {
    case TermKind::Prefix: return "prefix";
    case TermKind::Suffix: return "suffix";
    case TermKind::Substring: return "substring";
    case TermKind::Exact: return "exact";
  }
  return "?";
}

struct WildcardTerm {
  TermKind kind = TermKind::Exact;
  std::string text;

  friend bool operator==(const WildcardTerm&, const WildcardTerm&) = default;
};

/// Parses the surface syntax: "ab*" prefix, "*ab" suffix, "*ab*" substring,
/// "ab" exact. Any other '*' placement is rejected.
inline WildcardTerm parse_term(std::string_view surface) {
  const bool lead = !surface.empty() && surface.front() == '*';
  const bool trail = surface.size() > 1 && surface.back() == '*';
  std::string_view core = surface;
  if (lead) core.remove_prefix(1);
  if (trail) core.remove_suffix(1);
  if (core.empty()) throw input_error("search term '" + std::string(surface) + "' has no characters");
  if (core.find('*') != std::string_view::npos) {
    throw input_error("search term '" + std::string(surface) + "' has '*' in an unsupported position");
  }
  TermKind kind = TermKind::Exact;
  if (lead && trail) {
    kind = TermKind::Substring;
  } else if (lead) {
    kind = TermKind::Suffix;
  } else if (trail) {
    kind = TermKind::Prefix;
  }
  return {kind, std::string(core)};
}

inline std::string to_surface(const WildcardTerm& t) {
  switch (t.kind) {
    case TermKind::Prefix: return t.text + "*";
    case TermKind::Suffix: return "*" + t.text;
    case TermKind::Substring: return "*" + t.text + "*";
    case TermKind::Exact: return t.text;
  }
  return t.text;
}

inline BinaryEntity encode_string(const AlphabetCodec& codec, std::string_view s) {
  const auto chars = split_chars(s);
  if (chars.empty()) throw input_error("cannot encode an empty string");
  BinaryEntity e{{}, codec.width()};
  for (const auto& c : chars) e.bits += codec.code(c);
  return e;
}

inline std::string decode_entity(const AlphabetCodec& codec, const BinaryEntity& e) {
  if (e.bits.empty()) throw input_error("cannot decode an empty entity");
  if (e.segment_width != codec.width() || e.bits.size() % codec.width() != 0) {
    throw input_error("entity length " + std::to_string(e.bits.size()) + " is not a multiple of codec width " +
                      std::to_string(codec.width()));
  }
  std::string out;
  for (std::size_t i = 0; i < e.bits.size(); i += codec.width()) {
    const auto seg = e.bits.substr(i, codec.width());
    auto sym = codec.symbol_for(seg);
    if (!sym) throw input_error("segment '" + seg + "' at bit " + std::to_string(i) + " has no assigned character");
    out += *sym;
  }
  return out;
}

/// Encodes equal-length strings, dropping duplicates (first occurrence wins).
inline BinaryEntitySet encode_dataset(const AlphabetCodec& codec, const std::vector<std::string>& strings) {
  if (strings.empty()) throw input_error("dataset is empty");
  BinaryEntitySet out;
  out.entity_chars = char_count(strings.front());
  std::set<std::string> seen;
  for (const auto& s : strings) {
    if (char_count(s) != out.entity_chars) {
      throw input_error("dataset strings differ in length ('" + strings.front() + "' vs '" + s + "')");
    }
    auto e = encode_string(codec, s);
    if (!seen.insert(e.bits).second) {
      out.duplicates_dropped = true;
      continue;
    }
    out.entities.push_back(std::move(e));
  }
  out.entity_bit_length = out.entity_chars * codec.width();
  return out;
}

namespace detail {

inline BoolExpr literals_at(const std::string& bits, std::size_t offset) {
  std::vector<BoolExpr> lits;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    lits.push_back(BoolExpr::literal(static_cast<unsigned>(offset + j), bits[j] == '1'));
  }
  return BoolExpr::all_of(std::move(lits));
}

inline std::string encode_term(const AlphabetCodec& codec, const std::string& term, std::size_t entity_chars) {
  const std::size_t n = char_count(term);
  if (n == 0) throw input_error("search term is empty");
  if (n > entity_chars) {
    throw input_error("search term '" + term + "' has " + std::to_string(n) + " characters, entities have " +
                      std::to_string(entity_chars));
  }
  return encode_string(codec, term).bits;
}

}  // namespace detail

/// Exact-match conjunction of one entity: one literal per bit.
inline BoolExpr entity_expression(const BinaryEntity& e) { return detail::literals_at(e.bits, 0); }

inline BoolExpr encode_prefix(const AlphabetCodec& codec, const std::string& term, std::size_t entity_chars) {
  return detail::literals_at(detail::encode_term(codec, term, entity_chars), 0);
}

inline BoolExpr encode_suffix(const AlphabetCodec& codec, const std::string& term, std::size_t entity_chars) {
  const auto bits = detail::encode_term(codec, term, entity_chars);
  return detail::literals_at(bits, entity_chars * codec.width() - bits.size());
}

/// Number of character-aligned placements of a term inside an entity.
inline std::size_t substring_placements(std::size_t entity_chars, std::size_t term_chars) {
  return term_chars > entity_chars ? 0 : entity_chars - term_chars + 1;
}

/// Disjunction of the term's conjunction at every character-aligned offset.
inline BoolExpr encode_substring(const AlphabetCodec& codec, const std::string& term, std::size_t entity_chars) {
  const auto bits = detail::encode_term(codec, term, entity_chars);
  const std::size_t count = substring_placements(entity_chars, char_count(term));
  std::vector<BoolExpr> placements;
  for (std::size_t p = 0; p < count; ++p) placements.push_back(detail::literals_at(bits, p * codec.width()));
  return BoolExpr::any_of(std::move(placements));
}

inline BoolExpr encode_term(const AlphabetCodec& codec, const WildcardTerm& term, std::size_t entity_chars) {
  switch (term.kind) {
    case TermKind::Prefix: return encode_prefix(codec, term.text, entity_chars);
    case TermKind::Suffix: return encode_suffix(codec, term.text, entity_chars);
    case TermKind::Substring: return encode_substring(codec, term.text, entity_chars);
    case TermKind::Exact:
      if (char_count(term.text) != entity_chars) {
        throw input_error("exact term '" + term.text + "' must have " + std::to_string(entity_chars) + " characters");
      }
      return encode_prefix(codec, term.text, entity_chars);
  }
  return BoolExpr::constant(false);
}

/// (d_1 ^ ... ^ d_k) & (s_1 | ... | s_j)
inline BoolExpr build_oracle_expression(std::vector<BoolExpr> data, std::vector<BoolExpr> searches) {
  if (data.empty()) throw input_error("oracle needs at least one data expression");
  if (searches.empty()) throw input_error("oracle needs at least one search expression");
  return BoolExpr::all_of({BoolExpr::parity_of(std::move(data)), BoolExpr::any_of(std::move(searches))});
}

/// Plain string matching used as ground truth for the quantum pipeline.
inline std::set<std::string> classical_match(const std::vector<std::string>& dataset,
                                             const std::vector<WildcardTerm>& terms) {
  std::vector<std::vector<std::string>> split_terms;
  for (const auto& t : terms) {
    if (t.text.empty()) throw input_error("search term is empty");
    split_terms.push_back(split_chars(t.text));
  }
  std::set<std::string> out;
  for (const auto& s : dataset) {
    const auto chars = split_chars(s);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& tc = split_terms[i];
      if (tc.size() > chars.size()) continue;
      bool hit = false;
      switch (terms[i].kind) {
        case TermKind::Prefix: hit = std::equal(tc.begin(), tc.end(), chars.begin()); break;
        case TermKind::Suffix: hit = std::equal(tc.begin(), tc.end(), chars.end() - static_cast<long>(tc.size())); break;
        case TermKind::Substring:
          hit = std::search(chars.begin(), chars.end(), tc.begin(), tc.end()) != chars.end();
          break;
        case TermKind::Exact: hit = tc == chars; break;
      }
      if (hit) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

}  // namespace qwild
