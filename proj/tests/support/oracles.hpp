// Copyright 2026 The latnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Slow, literal definitions used only to cross-check the library. Each one
// quantifies over every subset of the lattice, so they are limited to small
// lattices.

#ifndef LATNORM_TESTS_SUPPORT_ORACLES_HPP
#define LATNORM_TESTS_SUPPORT_ORACLES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "latnorm.hpp"

namespace oracle {

using latnorm::ElementId;
using latnorm::FiniteLattice;
using latnorm::TNormTable;

inline constexpr std::size_t kMaxSubsetElements = 12;

inline void require_small(const FiniteLattice& L) {
  if (L.size() > kMaxSubsetElements) throw std::invalid_argument("lattice too large for subset oracle");
}

/// Calls fn(mask) for every subset of the elements.
template <typename Fn>
void for_each_subset(const FiniteLattice& L, Fn&& fn) {
  require_small(L);
  const std::uint32_t limit = 1U << L.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) fn(mask);
}

inline ElementId join_of_mask(const FiniteLattice& L, std::uint32_t mask) {
  ElementId j = L.bottom();
  for (ElementId x = 0; x < L.size(); ++x)
    if ((mask >> x) & 1U) j = L.join(j, x);
  return j;
}

inline ElementId meet_of_mask(const FiniteLattice& L, std::uint32_t mask) {
  ElementId m = L.top();
  for (ElementId x = 0; x < L.size(); ++x)
    if ((mask >> x) & 1U) m = L.meet(m, x);
  return m;
}

/// T(a, V S) = V T(a, s) for every a and every family S; with `skip_top`
/// only families whose join is not the top count.
inline bool preserves_joins(const TNormTable& t, bool skip_top) {
  const auto& L = t.lattice();
  bool ok = true;
  for_each_subset(L, [&](std::uint32_t mask) {
    if (!ok) return;
    const ElementId j = join_of_mask(L, mask);
    if (skip_top && j == L.top()) return;
    for (ElementId a = 0; a < L.size() && ok; ++a) {
      ElementId rhs = L.bottom();
      for (ElementId s = 0; s < L.size(); ++s)
        if ((mask >> s) & 1U) rhs = L.join(rhs, t(a, s));
      if (t(a, j) != rhs) ok = false;
    }
  });
  return ok;
}

inline bool left_continuous(const TNormTable& t) { return preserves_joins(t, false); }
inline bool left_semicontinuous(const TNormTable& t) { return preserves_joins(t, true); }

/// T(a, /\ S) = /\ T(a, s) for every a and every nonempty family S.
inline bool right_continuous(const TNormTable& t) {
  const auto& L = t.lattice();
  bool ok = true;
  for_each_subset(L, [&](std::uint32_t mask) {
    if (!ok || mask == 0) return;
    const ElementId m = meet_of_mask(L, mask);
    for (ElementId a = 0; a < L.size() && ok; ++a) {
      ElementId rhs = L.top();
      for (ElementId s = 0; s < L.size(); ++s)
        if ((mask >> s) & 1U) rhs = L.meet(rhs, t(a, s));
      if (t(a, m) != rhs) ok = false;
    }
  });
  return ok;
}

/// x <= y implies T(x, z) <= T(y, z), over all pairs.
inline bool monotone_all_pairs(const TNormTable& t) {
  const auto& L = t.lattice();
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId y = 0; y < L.size(); ++y) {
      if (!L.leq(x, y)) continue;
      for (ElementId z = 0; z < L.size(); ++z)
        if (!L.leq(t(x, z), t(y, z)) || !L.leq(t(z, x), t(z, y))) return false;
    }
  return true;
}

/// Axioms checked with full-pairs monotonicity.
inline bool is_tnorm(const TNormTable& t) {
  const auto& L = t.lattice();
  const std::size_t n = L.size();
  for (ElementId x = 0; x < n; ++x)
    if (t(x, L.top()) != x || t(L.top(), x) != x) return false;
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (t(x, y) != t(y, x)) return false;
      for (ElementId z = 0; z < n; ++z)
        if (t(x, t(y, z)) != t(t(x, y), z)) return false;
    }
  return monotone_all_pairs(t);
}

inline std::uint32_t atoms_mask_below(const FiniteLattice& L, ElementId x) {
  std::uint32_t m = 0;
  for (ElementId u = 0; u < L.size(); ++u)
    if (L.covers(L.bottom(), u) && L.leq(u, x)) m |= 1U << u;
  return m;
}

/// The semicontinuity condition by its literal reading: for every family S
/// with V S != 1, each atom of V S outside every A(x), x in S, is unselected.
inline bool semicontinuity_condition(const FiniteLattice& L, const latnorm::AtomSelection& alpha) {
  bool ok = true;
  for_each_subset(L, [&](std::uint32_t mask) {
    if (!ok) return;
    const ElementId j = join_of_mask(L, mask);
    if (j == L.top()) return;
    std::uint32_t covered = 0;
    for (ElementId x = 0; x < L.size(); ++x)
      if ((mask >> x) & 1U) covered |= atoms_mask_below(L, x);
    const std::uint32_t fresh = atoms_mask_below(L, j) & ~covered;
    for (ElementId u = 0; u < L.size(); ++u)
      if (((fresh >> u) & 1U) && alpha.contains(u)) ok = false;
  });
  return ok;
}

/// A(V S) = U A(x) for every family S.
inline bool boolean_by_subsets(const FiniteLattice& L) {
  if (!latnorm::is_atomistic(L)) return false;
  bool ok = true;
  for_each_subset(L, [&](std::uint32_t mask) {
    if (!ok) return;
    std::uint32_t un = 0;
    for (ElementId x = 0; x < L.size(); ++x)
      if ((mask >> x) & 1U) un |= atoms_mask_below(L, x);
    if (atoms_mask_below(L, join_of_mask(L, mask)) != un) ok = false;
  });
  return ok;
}

/// The lift by its defining double join over C(L) \ {0} elements below
/// each argument (the top counts as below itself).
inline TNormTable double_join_lift(const latnorm::CSubPoset& c, const TNormTable& t_on_c) {
  const auto& L = *c.parent;
  return TNormTable::from_function(c.parent, [&](ElementId x, ElementId y) {
    ElementId acc = L.bottom();
    for (ElementId i = 0; i < c.to_parent.size(); ++i) {
      const ElementId u = c.to_parent[i];
      if (u == L.bottom() || !L.leq(u, x)) continue;
      for (ElementId j = 0; j < c.to_parent.size(); ++j) {
        const ElementId v = c.to_parent[j];
        if (v == L.bottom() || !L.leq(v, y)) continue;
        acc = L.join(acc, c.to_parent[t_on_c(i, j)]);
      }
    }
    return acc;
  });
}

/// T(x, x) = x.
inline std::vector<ElementId> idempotents(const TNormTable& t) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < t.lattice().size(); ++x)
    if (t(x, x) == x) out.push_back(x);
  return out;
}

}  // namespace oracle

#endif  // LATNORM_TESTS_SUPPORT_ORACLES_HPP
