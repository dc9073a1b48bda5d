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
#include <vector>

#include "qwild/truth_table.hpp"

namespace qwild {

/// A monomial is the AND of its (sorted, distinct) variable indices; the
/// empty monomial is the constant 1.
using Monomial = std::vector<unsigned>;

/// Algebraic normal form: f = XOR of the listed monomials over GF(2).
///
/// This is the positive-polarity Reed-Muller expansion. Monomials are kept
/// in ascending order of their row index in the coefficient table, so the
/// form is canonical for a given function.
struct AnfForm {
  unsigned var_count = 0;
  std::vector<Monomial> monomials;

  friend bool operator==(const AnfForm&, const AnfForm&) = default;
};

/// Coefficient-table index of a monomial (x0 is the most significant bit).
inline std::size_t monomial_index(const Monomial& m, unsigned var_count) {
  std::size_t u = 0;
  for (unsigned v : m) u |= std::size_t{1} << (var_count - 1 - v);
  return u;
}

namespace detail {

// In-place GF(2) Moebius transform; it is its own inverse.
inline void moebius(std::vector<std::uint8_t>& a) {
  for (std::size_t step = 1; step < a.size(); step <<= 1) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x & step) a[x] ^= a[x ^ step];
    }
  }
}

}  // namespace detail

inline AnfForm anf(const TruthTable& t) {
  std::vector<std::uint8_t> coeff(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) coeff[x] = t.get(x);
  detail::moebius(coeff);

  AnfForm out{t.var_count(), {}};
  const unsigned n = t.var_count();
  for (std::size_t u = 0; u < coeff.size(); ++u) {
    if (!coeff[u]) continue;
    Monomial m;
    for (unsigned v = 0; v < n; ++v) {
      if ((u >> (n - 1 - v)) & 1u) m.push_back(v);
    }
    out.monomials.push_back(std::move(m));
  }
  return out;
}

/// Inverse of anf(): re-expands the XOR of monomials into a truth table.
inline TruthTable expand(const AnfForm& form) {
  TruthTable t(form.var_count);
  std::vector<std::uint8_t> coeff(t.size(), 0);
  for (const auto& m : form.monomials) coeff[monomial_index(m, form.var_count)] ^= 1u;
  detail::moebius(coeff);
  for (std::size_t x = 0; x < coeff.size(); ++x) t.set(x, coeff[x] != 0);
  return t;
}

}  // namespace qwild
