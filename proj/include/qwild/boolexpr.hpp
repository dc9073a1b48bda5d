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
#include <cctype>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwild/error.hpp"
#include "qwild/truth_table.hpp"

namespace qwild {

enum class Op : std::uint8_t { Var, Const, Not, And, Or, Xor };

/// Immutable boolean expression tree. Copies share structure.
///
/// And/Or/Xor nodes are n-ary with at least two children. The factory
/// functions below collapse degenerate arities: an empty conjunction is
/// Const(1), an empty disjunction or XOR is Const(0), and a single operand
/// is returned as-is.
class BoolExpr {
 public:
  BoolExpr() : BoolExpr(constant(false)) {}

  static BoolExpr var(unsigned index) { return BoolExpr(Node{Op::Var, index, false, {}}); }
  static BoolExpr constant(bool value) { return BoolExpr(Node{Op::Const, 0, value, {}}); }
  static BoolExpr negate(BoolExpr child) { return BoolExpr(Node{Op::Not, 0, false, {std::move(child)}}); }

  /// Literal x_index when `positive`, ~x_index otherwise.
  static BoolExpr literal(unsigned index, bool positive) {
    return positive ? var(index) : negate(var(index));
  }

  static BoolExpr all_of(std::vector<BoolExpr> children) { return nary(Op::And, std::move(children), true); }
  static BoolExpr any_of(std::vector<BoolExpr> children) { return nary(Op::Or, std::move(children), false); }
  static BoolExpr parity_of(std::vector<BoolExpr> children) { return nary(Op::Xor, std::move(children), false); }

  Op op() const noexcept { return node_->op; }
  unsigned index() const noexcept { return node_->index; }
  bool value() const noexcept { return node_->value; }
  std::span<const BoolExpr> children() const noexcept { return node_->children; }

  bool is_nary() const noexcept { return op() == Op::And || op() == Op::Or || op() == Op::Xor; }

  /// One past the largest variable index used (0 for variable-free trees).
  unsigned var_bound() const {
    if (op() == Op::Var) return index() + 1;
    unsigned b = 0;
    for (const auto& c : children()) b = std::max(b, c.var_bound());
    return b;
  }

  friend bool operator==(const BoolExpr& a, const BoolExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op()) return false;
    switch (a.op()) {
      case Op::Var: return a.index() == b.index();
      case Op::Const: return a.value() == b.value();
      default: break;
    }
    return std::ranges::equal(a.children(), b.children());
  }

 private:
  struct Node {
    Op op;
    unsigned index;
    bool value;
    std::vector<BoolExpr> children;
  };

  explicit BoolExpr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  static BoolExpr nary(Op op, std::vector<BoolExpr> children, bool empty_value) {
    if (children.empty()) return constant(empty_value);
    if (children.size() == 1) return std::move(children.front());
    return BoolExpr(Node{op, 0, false, std::move(children)});
  }

  std::shared_ptr<const Node> node_;
};

inline BoolExpr operator~(BoolExpr e) { return BoolExpr::negate(std::move(e)); }
inline BoolExpr operator&(BoolExpr a, BoolExpr b) { return BoolExpr::all_of({std::move(a), std::move(b)}); }
inline BoolExpr operator|(BoolExpr a, BoolExpr b) { return BoolExpr::any_of({std::move(a), std::move(b)}); }
inline BoolExpr operator^(BoolExpr a, BoolExpr b) { return BoolExpr::parity_of({std::move(a), std::move(b)}); }

namespace detail {

inline char op_symbol(Op op) {
  switch (op) {
    case Op::And: return '&';
    case Op::Or: return '|';
    case Op::Xor: return '^';
    default: return '?';
  }
}

inline void render_into(const BoolExpr& e, std::string& out) {
  switch (e.op()) {
    case Op::Var:
      out += 'x';
      out += std::to_string(e.index());
      return;
    case Op::Const:
      out += e.value() ? '1' : '0';
      return;
    case Op::Not: {
      const auto& c = e.children().front();
      out += '~';
      if (c.is_nary()) out += '(';
      render_into(c, out);
      if (c.is_nary()) out += ')';
      return;
    }
    default: break;
  }
  bool first = true;
  for (const auto& c : e.children()) {
    if (!first) out += op_symbol(e.op());
    first = false;
    // n-ary children are always bracketed so the tree shape survives a reparse.
    if (c.is_nary()) out += '(';
    render_into(c, out);
    if (c.is_nary()) out += ')';
  }
}

class ExprParser {
 public:
  ExprParser(std::string_view text, unsigned var_count) : text_(text), var_count_(var_count) {}

  BoolExpr parse() {
    auto e = parse_level(0);
    skip_space();
    if (pos_ != text_.size()) throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  static constexpr Op levels[] = {Op::Or, Op::Xor, Op::And};

  BoolExpr parse_level(std::size_t level) {
    if (level == std::size(levels)) return parse_unary();
    const Op op = levels[level];
    std::vector<BoolExpr> operands;
    operands.push_back(parse_level(level + 1));
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == op_symbol(op)) {
        ++pos_;
        operands.push_back(parse_level(level + 1));
      } else {
        break;
      }
    }
    if (operands.size() == 1) return std::move(operands.front());
    switch (op) {
      case Op::Or: return BoolExpr::any_of(std::move(operands));
      case Op::Xor: return BoolExpr::parity_of(std::move(operands));
      default: return BoolExpr::all_of(std::move(operands));
    }
  }

  BoolExpr parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '~' || c == '!') {
      ++pos_;
      return BoolExpr::negate(parse_unary());
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      auto e = parse_level(0);
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw parse_error("unbalanced '(' opened", open);
      ++pos_;
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return BoolExpr::constant(c == '1');
    }
    if (c == 'x') {
      const std::size_t start = pos_++;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw parse_error("expected variable index after 'x'", pos_);
      }
      unsigned long idx = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        idx = idx * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        if (idx > max_vars * 1000ul) throw parse_error("variable index too large", start);
      }
      if (idx >= var_count_) {
        throw parse_error("variable x" + std::to_string(idx) + " out of range for " +
                              std::to_string(var_count_) + " variables",
                          start);
      }
      return BoolExpr::var(static_cast<unsigned>(idx));
    }
    throw parse_error(std::string("unexpected '") + c + "'", pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  unsigned var_count_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Text form accepted by parse(): x0.., 0/1, ~ & ^ | and parentheses.
inline std::string render(const BoolExpr& e) {
  std::string out;
  detail::render_into(e, out);
  return out;
}

/// Parses an expression over x0..x{var_count-1}.
///
/// Precedence from tightest: ~, &, ^, |. Chains of one operator become a
/// single n-ary node; parentheses always start a new node.
inline BoolExpr parse(std::string_view text, unsigned var_count) {
  return detail::ExprParser(text, var_count).parse();
}

inline bool evaluate(const BoolExpr& e, std::span<const std::uint8_t> assignment, unsigned var_count) {
  if (assignment.size() != var_count) {
    throw input_error("assignment has " + std::to_string(assignment.size()) + " bits, expected " +
                      std::to_string(var_count));
  }
  switch (e.op()) {
    case Op::Var:
      if (e.index() >= var_count) throw input_error("variable x" + std::to_string(e.index()) + " out of range");
      return assignment[e.index()] != 0;
    case Op::Const: return e.value();
    case Op::Not: return !evaluate(e.children().front(), assignment, var_count);
    case Op::And:
      return std::ranges::all_of(e.children(), [&](const BoolExpr& c) { return evaluate(c, assignment, var_count); });
    case Op::Or:
      return std::ranges::any_of(e.children(), [&](const BoolExpr& c) { return evaluate(c, assignment, var_count); });
    case Op::Xor: {
      bool acc = false;
      for (const auto& c : e.children()) acc ^= evaluate(c, assignment, var_count);
      return acc;
    }
  }
  return false;
}

/// Tabulates `e` over all 2^var_count assignments, word-parallel.
inline TruthTable truth_table(const BoolExpr& e, unsigned var_count) {
  switch (e.op()) {
    case Op::Var: return TruthTable::projection(var_count, e.index());
    case Op::Const: return TruthTable::constant(var_count, e.value());
    case Op::Not: return ~truth_table(e.children().front(), var_count);
    default: break;
  }
  auto kids = e.children();
  TruthTable acc = truth_table(kids.front(), var_count);
  for (std::size_t i = 1; i < kids.size(); ++i) {
    const auto t = truth_table(kids[i], var_count);
    if (e.op() == Op::And) {
      acc &= t;
    } else if (e.op() == Op::Or) {
      acc |= t;
    } else {
      acc ^= t;
    }
  }
  return acc;
}

}  // namespace qwild
