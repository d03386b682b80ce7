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

#ifndef LATNORM_EXTENSION_HPP
#define LATNORM_EXTENSION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latnorm/atomic.hpp"
#include "latnorm/error.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

/// A finite lattice L together with its atomistic extension: one new atom
/// w_p with 0 < w_p < p (both covers) for every join-irreducible p of L that
/// is not an atom.
struct ExtendedLattice {
  LatticePtr original;
  LatticePtr extended;
  std::vector<ElementId> embed;  ///< original id -> extended id
  /// (p as an original id, w_p as an extended id), in the order of p.
  std::vector<std::pair<ElementId, ElementId>> new_atoms;

  std::optional<ElementId> original_of(ElementId ext_id) const {
    for (ElementId x = 0; x < embed.size(); ++x)
      if (embed[x] == ext_id) return x;
    return std::nullopt;
  }
  std::optional<ElementId> new_atom_of(ElementId p) const {
    for (const auto& [q, w] : new_atoms)
      if (q == p) return w;
    return std::nullopt;
  }
  ElementSet embedded_set() const { return extended->set_of(embed); }

  /// {"w_p": "p", ...}
  nlohmann::json sidecar() const {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [p, w] : new_atoms) out[extended->name(w)] = original->name(p);
    return out;
  }
};

/// Builds the extension. New atoms are named "w_<p>" and placed directly
/// after the last atom of L, in the order their p appear in L; the elements
/// of L keep their relative order.
inline ExtendedLattice extend(const LatticePtr& L) {
  const std::size_t n = L->size();
  const auto hidden = non_atomic_join_irreducibles(*L).members();
  std::optional<ElementId> last_atom;
  for (ElementId x = 0; x < n; ++x)
    if (L->atom_bits().test(x)) last_atom = x;

  std::vector<std::string> names;
  std::vector<ElementId> embed(n);
  std::vector<ElementId> new_ids;
  auto place_new_atoms = [&] {
    for (auto p : hidden) {
      std::string label = "w_" + L->name(p);
      if (L->find(label))
        throw Error(ErrorKind::DuplicateLabel,
                    "new atom label '" + label + "' collides with an existing element", {label});
      new_ids.push_back(static_cast<ElementId>(names.size()));
      names.push_back(std::move(label));
    }
  };
  for (ElementId x = 0; x < n; ++x) {
    embed[x] = static_cast<ElementId>(names.size());
    names.push_back(L->name(x));
    if (last_atom && x == *last_atom) place_new_atoms();
  }
  if (!last_atom) place_new_atoms();

  const std::size_t m = names.size();
  std::vector<DynamicBitset> down(m, DynamicBitset(m));
  for (ElementId y = 0; y < n; ++y) {
    auto& d = down[embed[y]];
    L->down_set(y).for_each([&](std::size_t x) { d.set(embed[x]); });
    for (std::size_t i = 0; i < hidden.size(); ++i)
      if (L->leq(hidden[i], y)) d.set(new_ids[i]);
  }
  for (auto w : new_ids) {
    down[w].set(w);
    down[w].set(embed[L->bottom()]);
  }

  std::vector<CoverPair> hint;
  for (const auto& [lo, hi] : L->cover_pairs()) hint.emplace_back(embed[lo], embed[hi]);
  for (std::size_t i = 0; i < hidden.size(); ++i) {
    hint.emplace_back(embed[L->bottom()], new_ids[i]);
    hint.emplace_back(new_ids[i], embed[hidden[i]]);
  }

  ExtendedLattice ext;
  ext.original = L;
  try {
    ext.extended = FiniteLattice::from_order(std::move(names), std::move(down), hint);
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("extension failed to be a lattice: ") + e.what());
  }
  ext.embed = std::move(embed);
  for (std::size_t i = 0; i < hidden.size(); ++i) ext.new_atoms.emplace_back(hidden[i], new_ids[i]);
  if (!is_atomistic(*ext.extended))
    throw Error(ErrorKind::Internal, "extension is not atomistic");
  return ext;
}

/// For every p in H(L) other than the top: if w_p is selected, some other
/// atom below p is selected too. Witness on failure: (p, w_p) as extended ids.
inline Verdict condition_c(const ExtendedLattice& ext, const AtomSelection& alpha) {
  const auto& X = *ext.extended;
  X.check_owns(alpha.atoms());
  for (const auto& [p, w] : ext.new_atoms) {
    if (p == ext.original->top() || !alpha.contains(w)) continue;
    ElementSet others = atoms_below(X, ext.embed[p]);
    others.erase(w);
    if (!others.intersects(alpha.atoms()))
      return Verdict::fail("condition (C)", {ext.embed[p], w});
  }
  return Verdict::pass();
}

/// Restriction of a lift on the extension back to L. Fails with
/// ConditionCViolated, witness (p, x, y), when T(x, y) = w_p for some x, y
/// in L.
inline TNormTable restrict_to_original(const ExtendedLattice& ext, const GeneratedTNorm& g) {
  const auto& t = g.lifted;
  if (t.lattice().id() != ext.extended->id())
    throw Error(ErrorKind::LatticeMismatch, "t-norm is not defined on this extension");
  const auto& L = *ext.original;
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId y = 0; y < L.size(); ++y) {
      const ElementId v = t(ext.embed[x], ext.embed[y]);
      if (ext.original_of(v)) continue;
      std::string p = "?";
      for (const auto& [q, w] : ext.new_atoms)
        if (w == v) p = L.name(q);
      throw Error(ErrorKind::ConditionCViolated,
                  "T(" + L.name(x) + ", " + L.name(y) + ") = " + ext.extended->name(v) +
                      " is not an element of L (p = " + p + ")",
                  {p, L.name(x), L.name(y)});
    }
  return restrict_onto(t, ext.embed, ext.original);
}

struct SMember {
  AtomSelection alpha;
  Verdict condition;                      ///< condition (C)
  std::optional<TNormTable> restricted;   ///< present iff condition holds
  std::optional<bool> lifted_left_semicontinuous;
};

/// All selections on the extension with, for those passing condition (C),
/// the restricted t-norm on L. `distinct` indexes the first member carrying
/// each different restricted table.
struct SFamily {
  std::vector<SMember> members;
  std::vector<std::size_t> distinct;

  std::optional<std::size_t> find(const AtomSelection& a) const {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i].alpha == a) return i;
    return std::nullopt;
  }
};

inline SFamily s_family(const ExtendedLattice& ext, std::size_t atom_cap = kDefaultAtomCap) {
  const auto c = c_subposet(ext.extended);
  SFamily fam;
  std::set<std::vector<ElementId>> seen;
  for_each_c_tnorm(c, atom_cap, [&](const AtomSelection& a, const TNormTable&) {
    SMember m{a, condition_c(ext, a), std::nullopt, std::nullopt};
    if (m.condition.ok()) {
      auto g = generate(c, a);
      m.lifted_left_semicontinuous = g.left_semicontinuous;
      m.restricted = restrict_to_original(ext, g);
      if (seen.insert(m.restricted->cells()).second) fam.distinct.push_back(fam.members.size());
    }
    fam.members.push_back(std::move(m));
  });
  return fam;
}

/// The union of two passing selections; its restriction is the least upper
/// bound of the two restrictions in the family.
inline AtomSelection s_family_join(const ExtendedLattice& ext, const AtomSelection& a1,
                                   const AtomSelection& a2) {
  for (const auto* a : {&a1, &a2}) {
    if (auto v = condition_c(ext, *a); !v)
      throw Error(ErrorKind::ConditionCViolated,
                  "selection " + a->describe(*ext.extended) + " fails condition (C)",
                  v.violation->witness_labels(*ext.extended));
  }
  AtomSelection u(*ext.extended, a1.atoms() | a2.atoms());
  if (auto v = condition_c(ext, u); !v)
    throw Error(ErrorKind::Internal, "union of passing selections fails condition (C)",
                v.violation->witness_labels(*ext.extended));
  return u;
}

/// Greatest lower bound of members i and j among the distinct restricted
/// tables, found by scanning. Returns a member index.
inline std::optional<std::size_t> s_family_meet(const SFamily& fam, std::size_t i, std::size_t j) {
  const auto& ti = fam.members.at(i).restricted;
  const auto& tj = fam.members.at(j).restricted;
  if (!ti || !tj)
    throw Error(ErrorKind::ConditionCViolated, "meet taken of a selection failing condition (C)");
  std::vector<std::size_t> lower;
  for (auto k : fam.distinct) {
    const auto& tk = *fam.members[k].restricted;
    if (tnorm_le(tk, *ti) && tnorm_le(tk, *tj)) lower.push_back(k);
  }
  for (auto k : lower) {
    bool greatest = true;
    for (auto l : lower)
      if (!tnorm_le(*fam.members[l].restricted, *fam.members[k].restricted)) {
        greatest = false;
        break;
      }
    if (greatest) return k;
  }
  return std::nullopt;
}

/// What the extension guarantees about a restricted t-norm and what the
/// direct checks observe.
struct RestrictionContinuity {
  bool lifted_left_semicontinuous = false;  ///< hypothesis on the lift
  bool top_join_irreducible = false;        ///< 1 in J(L)
  bool implies_left_semicontinuous = false;
  bool implies_left_continuous = false;
  Verdict left_semicontinuous;
  Verdict left_continuous;
  Verdict continuous;

  /// Every implied property is observed.
  bool consistent() const {
    return (!implies_left_semicontinuous || left_semicontinuous.ok()) &&
           (!implies_left_continuous || left_continuous.ok());
  }
};

inline RestrictionContinuity continuity_of_restriction(const ExtendedLattice& ext,
                                                       const TNormTable& restricted,
                                                       bool lifted_left_semicontinuous) {
  if (restricted.lattice().id() != ext.original->id())
    throw Error(ErrorKind::LatticeMismatch, "t-norm is not defined on the original lattice");
  RestrictionContinuity r;
  r.lifted_left_semicontinuous = lifted_left_semicontinuous;
  r.top_join_irreducible = join_irreducibles(*ext.original).contains(ext.original->top());
  r.implies_left_semicontinuous = lifted_left_semicontinuous;
  r.implies_left_continuous = lifted_left_semicontinuous && r.top_join_irreducible;
  r.left_semicontinuous = is_left_semicontinuous(restricted);
  r.left_continuous = is_left_continuous(restricted);
  r.continuous = is_continuous(restricted);
  return r;
}

}  // namespace latnorm

#endif  // LATNORM_EXTENSION_HPP
