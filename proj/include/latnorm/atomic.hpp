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

// T-norms generated from atoms. On an atomistic lattice L the skeleton
// C(L) = A(L) u {0, 1} carries exactly one t-norm T_alpha per subset alpha of
// atoms, and each lifts to a t-norm on L whose value off the top row and
// column is the join of the alpha-atoms below x ^ y.

#ifndef LATNORM_ATOMIC_HPP
#define LATNORM_ATOMIC_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "latnorm/element_set.hpp"
#include "latnorm/error.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

/// Default limit on |A(L)| for anything that walks all 2^|A(L)| selections.
inline constexpr std::size_t kDefaultAtomCap = 20;
/// Default limit on |A(L)| for the pairwise isomorphism check.
inline constexpr std::size_t kDefaultIsomorphismAtomCap = 8;

enum class CMode {
  strict,      ///< parent must be atomistic
  diagnostic,  ///< build C(L) for any lattice; lifting is refused
};

/// The sub-poset A(L) u {0, 1} of a lattice, materialized as a lattice of
/// length at most two.
struct CSubPoset {
  LatticePtr parent;
  ElementSet elements;             ///< in the parent
  LatticePtr lattice;              ///< elements in parent order
  std::vector<ElementId> to_parent;
  bool degenerate = false;         ///< length(parent) <= 1, so C(L) = L
  bool diagnostic = false;         ///< parent is not atomistic

  ElementId local(ElementId parent_id) const {
    for (std::size_t i = 0; i < to_parent.size(); ++i)
      if (to_parent[i] == parent_id) return static_cast<ElementId>(i);
    throw Error(ErrorKind::InvalidArgument,
                "element " + parent->name(parent_id) + " is not in C(L)");
  }
};

inline CSubPoset c_subposet(const LatticePtr& L, CMode mode = CMode::strict) {
  const bool atomistic = is_atomistic(*L);
  if (!atomistic && mode == CMode::strict)
    throw Error(ErrorKind::NotAtomistic, "C(L) construction needs an atomistic lattice");
  ElementSet k = atoms(*L);
  k.insert(L->bottom());
  k.insert(L->top());
  auto sub = induced_subposet(*L, k);
  CSubPoset c{L, k, sub.lattice, sub.to_parent};
  c.degenerate = length(*L) <= 1;
  c.diagnostic = !atomistic;
  return c;
}

/// A subset alpha of the atoms of one lattice.
class AtomSelection {
 public:
  AtomSelection(const FiniteLattice& L, ElementSet alpha) : alpha_(std::move(alpha)) {
    L.check_owns(alpha_);
    const ElementSet stray = alpha_ - latnorm::atoms(L);
    if (!stray.empty())
      throw Error(ErrorKind::NonAtomInAlpha,
                  "'" + L.name(stray.members().front()) + "' is not an atom", L.labels(stray));
  }

  static AtomSelection none(const FiniteLattice& L) { return {L, L.empty_set()}; }
  static AtomSelection all(const FiniteLattice& L) { return {L, latnorm::atoms(L)}; }

  /// Comma-separated atom labels; the empty string selects no atoms.
  static AtomSelection parse(const FiniteLattice& L, std::string_view spec) {
    ElementSet s = L.empty_set();
    std::size_t start = 0;
    while (start <= spec.size()) {
      auto end = spec.find(',', start);
      if (end == std::string_view::npos) end = spec.size();
      auto token = spec.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (!token.empty()) s.insert(L.id_of(token));
      start = end + 1;
    }
    return {L, s};
  }

  /// Selection whose i-th atom (in element order) is chosen when bit i of
  /// `mask` is set.
  static AtomSelection from_mask(const FiniteLattice& L, std::uint64_t mask) {
    ElementSet s = L.empty_set();
    const auto list = latnorm::atoms(L).members();
    for (std::size_t i = 0; i < list.size(); ++i)
      if ((mask >> i) & 1U) s.insert(list[i]);
    return {L, s};
  }

  const ElementSet& atoms() const noexcept { return alpha_; }
  bool contains(ElementId a) const noexcept { return alpha_.contains(a); }

  std::uint64_t mask(const FiniteLattice& L) const {
    const auto list = latnorm::atoms(L).members();
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (alpha_.contains(list[i])) m |= std::uint64_t{1} << i;
    return m;
  }

  /// Member labels sorted by name.
  std::vector<std::string> sorted_labels(const FiniteLattice& L) const {
    auto labels = L.labels(alpha_);
    std::sort(labels.begin(), labels.end());
    return labels;
  }

  /// "alpha_b_w_d", or "alpha_empty" for the empty selection.
  std::string file_stem(const FiniteLattice& L) const {
    if (alpha_.empty()) return "alpha_empty";
    std::string out = "alpha";
    for (const auto& l : sorted_labels(L)) out += "_" + l;
    return out;
  }

  std::string describe(const FiniteLattice& L) const {
    std::string out = "{";
    bool first = true;
    for (auto a : alpha_.members()) {
      if (!first) out += ", ";
      first = false;
      out += L.name(a);
    }
    return out + "}";
  }

  friend bool operator==(const AtomSelection& a, const AtomSelection& b) {
    return a.alpha_ == b.alpha_;
  }

 private:
  ElementSet alpha_;
};

/// T_alpha on C(L): meet on the top row and column, u on the diagonal for
/// u in alpha, bottom everywhere else.
inline TNormTable t_alpha(const CSubPoset& c, const AtomSelection& alpha) {
  c.parent->check_owns(alpha.atoms());
  const auto& C = *c.lattice;
  return TNormTable::from_function(c.lattice, [&](ElementId x, ElementId y) {
    if (x == C.top() || y == C.top()) return C.meet(x, y);
    if (x == y && alpha.contains(c.to_parent[x])) return x;
    return C.bottom();
  });
}

/// Calls `fn(alpha, T_alpha)` for every t-norm on C(L), alphas in mask
/// order. On a lattice of length <= 1 the t-norm is unique and is reported
/// once, with alpha = A(L).
inline void for_each_c_tnorm(const CSubPoset& c, std::size_t atom_cap,
                             const std::function<void(const AtomSelection&, const TNormTable&)>& fn) {
  const auto& L = *c.parent;
  if (c.degenerate) {
    auto a = AtomSelection::all(L);
    fn(a, t_alpha(c, a));
    return;
  }
  const std::size_t k = atoms(L).size();
  if (k > atom_cap)
    throw Error(ErrorKind::BoundExceeded, std::to_string(k) + " atoms exceed the cap of " +
                                              std::to_string(atom_cap));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    auto a = AtomSelection::from_mask(L, mask);
    fn(a, t_alpha(c, a));
  }
}

inline std::vector<std::pair<AtomSelection, TNormTable>> enumerate_c_tnorms(
    const CSubPoset& c, std::size_t atom_cap = kDefaultAtomCap) {
  std::vector<std::pair<AtomSelection, TNormTable>> out;
  for_each_c_tnorm(c, atom_cap, [&](const AtomSelection& a, const TNormTable& t) {
    out.emplace_back(a, t);
  });
  return out;
}

namespace detail {

/// Every t-norm on C(L) has the T_alpha shape; anything else is rejected.
inline void check_c_shape(const CSubPoset& c, const TNormTable& t) {
  if (t.lattice().id() != c.lattice->id())
    throw Error(ErrorKind::LatticeMismatch, "table is not defined on this C(L)");
  const auto& C = *c.lattice;
  for (ElementId x = 0; x < C.size(); ++x) {
    for (ElementId y = 0; y < C.size(); ++y) {
      ElementId expected;
      if (x == C.top() || y == C.top()) {
        expected = C.meet(x, y);
      } else if (x == y && t(x, x) == x) {
        expected = x;
      } else {
        expected = C.bottom();
      }
      if (t(x, y) != expected)
        throw Error(ErrorKind::NotATNorm, "table is not a t-norm on C(L)",
                    {C.name(x), C.name(y)});
    }
  }
}

}  // namespace detail

/// Atoms u with T(u,u) = u, as a selection on the parent lattice.
inline AtomSelection idempotent_atoms(const CSubPoset& c, const TNormTable& t_on_c) {
  ElementSet s = c.parent->empty_set();
  for (ElementId u = 0; u < c.lattice->size(); ++u)
    if (c.lattice->atom_bits().test(u) && t_on_c(u, u) == u) s.insert(c.to_parent[u]);
  return {*c.parent, s};
}

/// Extends a t-norm on C(L) to all of L by joining over the atoms below each
/// argument. Evaluated in closed form: x and y on the top row and column,
/// otherwise the join of the idempotent atoms below x ^ y.
inline TNormTable lift(const CSubPoset& c, const TNormTable& t_on_c) {
  if (c.diagnostic)
    throw Error(ErrorKind::NotAtomistic, "lifting needs an atomistic lattice");
  detail::check_c_shape(c, t_on_c);
  const auto& L = *c.parent;
  if (c.degenerate) return t_min(c.parent);
  const AtomSelection alpha = idempotent_atoms(c, t_on_c);
  std::vector<ElementId> value(L.size());
  for (ElementId z = 0; z < L.size(); ++z) {
    ElementId acc = L.bottom();
    (L.atom_bits_below(z) & alpha.atoms().bits()).for_each([&](std::size_t u) {
      acc = L.join(acc, static_cast<ElementId>(u));
    });
    value[z] = acc;
  }
  const ElementId top = L.top();
  return TNormTable::from_function(c.parent, [&](ElementId x, ElementId y) {
    if (x == top) return y;
    if (y == top) return x;
    return value[L.meet(x, y)];
  });
}

/// A member of the generated family: the selection, its t-norm on C(L) and
/// the lift to L.
struct GeneratedTNorm {
  AtomSelection alpha;
  TNormTable on_c;
  TNormTable lifted;
  /// Whether the lift is left-semicontinuous, when known.
  std::optional<bool> left_semicontinuous;
};

/// A(x) n alpha.
inline ElementSet theta(const GeneratedTNorm& g, ElementId x) {
  return atoms_below(g.lifted.lattice(), x) & g.alpha.atoms();
}
/// A(x) \ alpha.
inline ElementSet beta(const GeneratedTNorm& g, ElementId x) {
  return atoms_below(g.lifted.lattice(), x) - g.alpha.atoms();
}

/// Holds iff no atom u in alpha lies below the join of {x <= z : u !<= x} for
/// some z != 1. A family S with V S != 1 and u in A(V S) outside every A(x),
/// x in S, exists exactly when z = V S gives such a witness, so single
/// elements z replace the quantification over families. Witness: (u, z).
inline Verdict semicontinuity_condition(const FiniteLattice& L, const AtomSelection& alpha) {
  if (!is_atomistic(L))
    throw Error(ErrorKind::NotAtomistic, "condition is defined on atomistic lattices");
  L.check_owns(alpha.atoms());
  for (auto u : alpha.atoms().members()) {
    for (ElementId z = 0; z < L.size(); ++z) {
      if (z == L.top()) continue;
      ElementId j = L.bottom();
      L.down_set(z).for_each([&](std::size_t x) {
        if (!L.leq(u, static_cast<ElementId>(x))) j = L.join(j, static_cast<ElementId>(x));
      });
      if (L.leq(u, j)) return Verdict::fail("semicontinuity condition", {u, z});
    }
  }
  return Verdict::pass();
}

inline GeneratedTNorm generate(const CSubPoset& c, const AtomSelection& alpha) {
  auto on_c = t_alpha(c, alpha);
  auto lifted = lift(c, on_c);
  std::optional<bool> lsc;
  if (!c.degenerate) lsc = semicontinuity_condition(*c.parent, alpha).ok();
  else lsc = true;
  return GeneratedTNorm{alpha, std::move(on_c), std::move(lifted), lsc};
}

/// All lifts of t-norms on C(L). Members are pairwise distinct; a collision
/// would mean the construction is broken and raises an internal error.
inline std::vector<GeneratedTNorm> generated_family(const CSubPoset& c,
                                                    std::size_t atom_cap = kDefaultAtomCap) {
  std::vector<GeneratedTNorm> out;
  std::set<std::vector<ElementId>> seen;
  for_each_c_tnorm(c, atom_cap, [&](const AtomSelection& a, const TNormTable&) {
    auto g = generate(c, a);
    if (!seen.insert(g.lifted.cells()).second)
      throw Error(ErrorKind::Internal, "two selections produced the same lift");
    out.push_back(std::move(g));
  });
  return out;
}

inline std::vector<GeneratedTNorm> generated_family(const LatticePtr& L,
                                                    std::size_t atom_cap = kDefaultAtomCap) {
  return generated_family(c_subposet(L), atom_cap);
}

/// Idempotents read off the selection: 0, 1, and every x admitting a
/// maximal independent subset of A(x) made of selected atoms.
inline ElementSet idempotents_via_independence(const GeneratedTNorm& g) {
  const auto& L = g.lifted.lattice();
  ElementSet out = L.empty_set();
  out.insert(L.bottom());
  out.insert(L.top());
  for (ElementId x = 0; x < L.size(); ++x) {
    if (x == L.bottom() || x == L.top()) continue;
    for (const auto& b : maximal_independent_subsets(L, atoms_below(L, x))) {
      if (b.is_subset_of(g.alpha.atoms())) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

/// Result of checking that the generated family is a copy of the powerset
/// of the atoms. Index i of every vector is the selection with mask i.
struct IsomorphismReport {
  std::vector<AtomSelection> selections;
  std::vector<TNormTable> on_c;
  std::vector<TNormTable> lifted;
  /// For Boolean L: element id -> index of the lift of A(x).
  std::optional<std::vector<std::size_t>> lattice_map;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Builds alpha -> T_alpha and T -> lift(T) and checks that both are order
/// isomorphisms, that joins, meets and complements in the family are the
/// lifts of unions, intersections and complements, and, on Boolean L, that
/// x -> lift(T_A(x)) is an order isomorphism from L onto the family.
inline IsomorphismReport poset_isomorphism_check(const LatticePtr& L,
                                                 std::size_t atom_cap = kDefaultIsomorphismAtomCap) {
  const auto c = c_subposet(L);
  if (c.degenerate)
    throw Error(ErrorKind::InvalidArgument,
                "lattices of length <= 1 carry a single t-norm; the check needs length >= 2");
  const std::size_t k = atoms(*L).size();
  if (k > atom_cap)
    throw Error(ErrorKind::BoundExceeded, std::to_string(k) + " atoms exceed the cap of " +
                                              std::to_string(atom_cap));
  IsomorphismReport r;
  const std::size_t m = std::size_t{1} << k;
  for (std::uint64_t mask = 0; mask < m; ++mask) {
    auto a = AtomSelection::from_mask(*L, mask);
    auto t = t_alpha(c, a);
    r.lifted.push_back(lift(c, t));
    r.on_c.push_back(std::move(t));
    r.selections.push_back(std::move(a));
  }
  auto fail = [&](std::string msg) {
    if (r.failures.size() < 16) r.failures.push_back(std::move(msg));
  };

  for (std::size_t i = 0; i < m; ++i) {
    if (idempotent_atoms(c, r.on_c[i]).mask(*L) != i)
      fail("theta_T(1) does not recover selection " + r.selections[i].describe(*L));
    if (!(restrict_onto(r.lifted[i], c.to_parent, c.lattice) == r.on_c[i]))
      fail("lift of " + r.selections[i].describe(*L) + " does not restrict back to T_alpha");
  }

  std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      le[i][j] = tnorm_le(r.lifted[i], r.lifted[j]);
      const bool subset = (i & ~j) == 0;
      if (le[i][j] != subset)
        fail("lift order disagrees with inclusion for " + r.selections[i].describe(*L) +
             " and " + r.selections[j].describe(*L));
      if (tnorm_le(r.on_c[i], r.on_c[j]) != subset)
        fail("order on C(L) disagrees with inclusion for " + r.selections[i].describe(*L) +
             " and " + r.selections[j].describe(*L));
      if (i != j && r.lifted[i] == r.lifted[j]) fail("two lifts coincide");
    }

  auto least_upper = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    for (std::size_t u = 0; u < m; ++u) {
      if (!le[i][u] || !le[j][u]) continue;
      bool least = true;
      for (std::size_t v = 0; v < m && least; ++v)
        if (le[i][v] && le[j][v] && !le[u][v]) least = false;
      if (least) return u;
    }
    return std::nullopt;
  };
  auto greatest_lower = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    for (std::size_t u = 0; u < m; ++u) {
      if (!le[u][i] || !le[u][j]) continue;
      bool greatest = true;
      for (std::size_t v = 0; v < m && greatest; ++v)
        if (le[v][i] && le[v][j] && !le[v][u]) greatest = false;
      if (greatest) return u;
    }
    return std::nullopt;
  };
  std::vector<std::vector<std::size_t>> lub(m, std::vector<std::size_t>(m, m)),
      glb(m, std::vector<std::size_t>(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      auto u = least_upper(i, j);
      auto l = greatest_lower(i, j);
      if (u) lub[i][j] = lub[j][i] = *u;
      if (l) glb[i][j] = glb[j][i] = *l;
      if (!u || *u != (i | j))
        fail("join of lifts for " + r.selections[i].describe(*L) + " and " +
             r.selections[j].describe(*L) + " is not the lift of the union");
      if (!l || *l != (i & j))
        fail("meet of lifts for " + r.selections[i].describe(*L) + " and " +
             r.selections[j].describe(*L) + " is not the lift of the intersection");
    }
  const std::size_t full = m - 1;
  for (std::size_t b = 0; b < m; ++b) {
    std::vector<std::size_t> complements;
    for (std::size_t a = 0; a < m; ++a)
      if (lub[a][b] == full && glb[a][b] == 0) complements.push_back(a);
    if (complements.size() != 1 || complements.front() != (full & ~b))
      fail("complement of the lift of " + r.selections[b].describe(*L) +
           " is not the lift of the complementary selection");
  }

  if (is_boolean_atomistic(*L)) {
    std::vector<std::size_t> map(L->size());
    std::vector<bool> hit(m, false);
    for (ElementId x = 0; x < L->size(); ++x) {
      map[x] = AtomSelection(*L, atoms_below(*L, x)).mask(*L);
      hit[map[x]] = true;
    }
    for (std::size_t i = 0; i < m; ++i)
      if (!hit[i]) fail("lattice map misses a family member");
    if (L->size() != m) fail("Boolean lattice size differs from family size");
    for (ElementId x = 0; x < L->size(); ++x)
      for (ElementId y = 0; y < L->size(); ++y)
        if (L->leq(x, y) != le[map[x]][map[y]])
          fail("lattice order and family order disagree at " + L->name(x) + ", " + L->name(y));
    r.lattice_map = std::move(map);
  }
  return r;
}

}  // namespace latnorm

#endif  // LATNORM_ATOMIC_HPP
