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

#ifndef LATNORM_TNORM_HPP
#define LATNORM_TNORM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latnorm/element_set.hpp"
#include "latnorm/error.hpp"
#include "latnorm/lattice.hpp"

namespace latnorm {

/// A failed check: which property broke and on which elements.
struct Violation {
  std::string property;
  std::vector<ElementId> witness;

  std::string describe(const FiniteLattice& L) const {
    std::string out = property + " fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i != 0) out += ", ";
      out += L.name(witness[i]);
    }
    return out + ")";
  }
  std::vector<std::string> witness_labels(const FiniteLattice& L) const {
    std::vector<std::string> out;
    for (auto x : witness) out.push_back(L.name(x));
    return out;
  }
};

/// Outcome of a decision procedure; carries a witness when negative.
struct Verdict {
  std::optional<Violation> violation;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string property, std::vector<ElementId> witness) {
    return Verdict{Violation{std::move(property), std::move(witness)}};
  }
  bool ok() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

enum class Verification { unchecked, verified, refuted };

/// A binary operation on a finite lattice, stored as a dense Cayley table in
/// element order. The verification state records what is known about the
/// t-norm axioms; the cells never change after construction.
class TNormTable {
 public:
  TNormTable(LatticePtr lattice, std::vector<ElementId> cells,
             Verification state = Verification::unchecked,
             std::optional<Violation> refutation = std::nullopt)
      : lattice_(std::move(lattice)),
        cells_(std::move(cells)),
        state_(state),
        refutation_(std::move(refutation)) {
    if (!lattice_) throw Error(ErrorKind::InvalidArgument, "table without a lattice");
    const std::size_t n = lattice_->size();
    if (cells_.size() != n * n)
      throw Error(ErrorKind::InvalidArgument, "table is not total over the lattice");
    for (auto v : cells_)
      if (v >= n) throw Error(ErrorKind::InvalidArgument, "table entry outside the lattice");
  }

  template <typename Fn>
  static TNormTable from_function(LatticePtr lattice, Fn&& fn,
                                  Verification state = Verification::unchecked) {
    const std::size_t n = lattice->size();
    std::vector<ElementId> cells(n * n);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y) cells[x * n + y] = fn(x, y);
    return TNormTable(std::move(lattice), std::move(cells), state);
  }

  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  std::size_t size() const noexcept { return lattice_->size(); }

  ElementId operator()(ElementId x, ElementId y) const noexcept {
    return cells_[x * lattice_->size() + y];
  }
  const std::vector<ElementId>& cells() const noexcept { return cells_; }

  Verification state() const noexcept { return state_; }
  const std::optional<Violation>& refutation() const noexcept { return refutation_; }

  /// Same cells on the same lattice (verification state is ignored).
  friend bool operator==(const TNormTable& a, const TNormTable& b) {
    return a.lattice_->id() == b.lattice_->id() && a.cells_ == b.cells_;
  }

 private:
  LatticePtr lattice_;
  std::vector<ElementId> cells_;
  Verification state_;
  std::optional<Violation> refutation_;
};

/// Checks the four t-norm axioms in the order: neutral element, commutativity,
/// monotonicity, associativity. Monotonicity is tested only along covers
/// y < z, which suffices by transitivity and commutativity.
inline Verdict verify_tnorm(const TNormTable& t) {
  const auto& L = t.lattice();
  const ElementId n = static_cast<ElementId>(L.size());
  const ElementId top = L.top();
  for (ElementId x = 0; x < n; ++x)
    if (t(x, top) != x) return Verdict::fail("neutral element", {x});
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = x + 1; y < n; ++y)
      if (t(x, y) != t(y, x)) return Verdict::fail("commutativity", {x, y});
  for (const auto& [lo, hi] : L.cover_pairs())
    for (ElementId x = 0; x < n; ++x)
      if (!L.leq(t(x, lo), t(x, hi))) return Verdict::fail("monotonicity", {x, lo, hi});
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z)
        if (t(x, t(y, z)) != t(t(x, y), z)) return Verdict::fail("associativity", {x, y, z});
  return Verdict::pass();
}

/// Copy of `t` with its verification state filled in.
inline TNormTable verified(const TNormTable& t) {
  auto v = verify_tnorm(t);
  return TNormTable(t.lattice_ptr(), t.cells(),
                    v.ok() ? Verification::verified : Verification::refuted, v.violation);
}

inline TNormTable t_min(const LatticePtr& L) {
  return TNormTable::from_function(
      L, [&](ElementId x, ElementId y) { return L->meet(x, y); }, Verification::verified);
}

inline TNormTable t_drastic(const LatticePtr& L) {
  const ElementId top = L->top();
  return TNormTable::from_function(
      L,
      [&](ElementId x, ElementId y) {
        return (x == top || y == top) ? L->meet(x, y) : L->bottom();
      },
      Verification::verified);
}

inline void check_same_lattice(const TNormTable& a, const TNormTable& b) {
  if (a.lattice().id() != b.lattice().id())
    throw Error(ErrorKind::LatticeMismatch, "t-norms live on different lattices");
}

/// Pointwise order: t1(x,y) <= t2(x,y) everywhere.
inline bool tnorm_le(const TNormTable& t1, const TNormTable& t2) {
  check_same_lattice(t1, t2);
  const auto& L = t1.lattice();
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId y = 0; y < L.size(); ++y)
      if (!L.leq(t1(x, y), t2(x, y))) return false;
  return true;
}

inline ElementSet idempotents(const TNormTable& t) {
  ElementSet out = t.lattice().empty_set();
  for (ElementId x = 0; x < t.size(); ++x)
    if (t(x, x) == x) out.insert(x);
  return out;
}

/// T(a, x v y) = T(a,x) v T(a,y) for all a, x, y. Finite joins reduce to
/// binary ones, and the empty join holds because T(a,0) = 0.
inline Verdict is_left_continuous(const TNormTable& t) {
  const auto& L = t.lattice();
  const ElementId n = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = x + 1; y < n; ++y)
        if (t(a, L.join(x, y)) != L.join(t(a, x), t(a, y)))
          return Verdict::fail("left-continuity", {a, x, y});
  return Verdict::pass();
}

/// T(a, x ^ y) = T(a,x) ^ T(a,y) for all a, x, y (families are nonempty).
inline Verdict is_right_continuous(const TNormTable& t) {
  const auto& L = t.lattice();
  const ElementId n = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = x + 1; y < n; ++y)
        if (t(a, L.meet(x, y)) != L.meet(t(a, x), t(a, y)))
          return Verdict::fail("right-continuity", {a, x, y});
  return Verdict::pass();
}

inline Verdict is_continuous(const TNormTable& t) {
  if (auto v = is_left_continuous(t); !v) return v;
  return is_right_continuous(t);
}

/// Left-continuity restricted to pairs whose join is not the top. Every
/// prefix join of a family with join != 1 is itself != 1, so the binary
/// case carries over to all finite families.
inline Verdict is_left_semicontinuous(const TNormTable& t) {
  const auto& L = t.lattice();
  const ElementId n = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = x + 1; y < n; ++y) {
        const ElementId j = L.join(x, y);
        if (j != L.top() && t(a, j) != L.join(t(a, x), t(a, y)))
          return Verdict::fail("left-semicontinuity", {a, x, y});
      }
  return Verdict::pass();
}

/// A subset of a lattice materialized as a lattice under the induced order.
struct InducedSubposet {
  LatticePtr lattice;
  std::vector<ElementId> to_parent;  ///< sub-poset id -> parent id
};

/// Induced order on K, elements kept in parent order. Fails with
/// NotALattice when the induced order is not a lattice.
inline InducedSubposet induced_subposet(const FiniteLattice& parent, const ElementSet& k) {
  parent.check_owns(k);
  const auto members = k.members();
  const std::size_t m = members.size();
  std::vector<std::string> names;
  for (auto x : members) names.push_back(parent.name(x));
  std::vector<DynamicBitset> down(m, DynamicBitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (parent.leq(members[j], members[i])) down[i].set(j);
  std::vector<CoverPair> order_hint;
  std::vector<std::size_t> local(parent.size(), m);
  for (std::size_t i = 0; i < m; ++i) local[members[i]] = i;
  for (const auto& [lo, hi] : parent.cover_pairs())
    if (local[lo] < m && local[hi] < m)
      order_hint.emplace_back(static_cast<ElementId>(local[lo]), static_cast<ElementId>(local[hi]));
  return {FiniteLattice::from_order(std::move(names), std::move(down), order_hint), members};
}

/// Restricts `t` to the listed parent elements and re-homes the result on
/// `target`, whose element i corresponds to parent element `to_parent[i]`.
inline TNormTable restrict_onto(const TNormTable& t, const std::vector<ElementId>& to_parent,
                                const LatticePtr& target) {
  const auto& P = t.lattice();
  if (target->size() != to_parent.size())
    throw Error(ErrorKind::InvalidArgument, "restriction map does not match target lattice");
  std::vector<std::size_t> local(P.size(), to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = i;
  if (local[P.top()] == to_parent.size())
    throw Error(ErrorKind::TopMissing, "sub-poset does not contain the top element",
                {P.name(P.top())});
  const std::size_t m = to_parent.size();
  std::vector<ElementId> cells(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const ElementId v = t(to_parent[i], to_parent[j]);
      if (local[v] == m)
        throw Error(ErrorKind::NotClosed,
                    "T(" + P.name(to_parent[i]) + ", " + P.name(to_parent[j]) + ") = " +
                        P.name(v) + " leaves the sub-poset",
                    {P.name(to_parent[i]), P.name(to_parent[j]), P.name(v)});
      cells[i * m + j] = static_cast<ElementId>(local[v]);
    }
  return TNormTable(target, std::move(cells));
}

/// Restriction of `t` to the sub-poset K. The result is a t-norm exactly
/// when K holds the top and is closed under t.
inline TNormTable restrict(const TNormTable& t, const ElementSet& k) {
  const auto& P = t.lattice();
  P.check_owns(k);
  if (!k.contains(P.top()))
    throw Error(ErrorKind::TopMissing, "sub-poset does not contain the top element",
                {P.name(P.top())});
  // Closure is checked before materializing K so a non-closed K reports
  // NotClosed rather than any order defect of K.
  const auto members = k.members();
  for (auto x : members)
    for (auto y : members)
      if (!k.contains(t(x, y)))
        throw Error(ErrorKind::NotClosed,
                    "T(" + P.name(x) + ", " + P.name(y) + ") = " + P.name(t(x, y)) +
                        " leaves the sub-poset",
                    {P.name(x), P.name(y), P.name(t(x, y))});
  auto sub = induced_subposet(P, k);
  return restrict_onto(t, sub.to_parent, sub.lattice);
}

}  // namespace latnorm

#endif  // LATNORM_TNORM_HPP
