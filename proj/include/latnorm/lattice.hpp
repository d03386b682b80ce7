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

#ifndef LATNORM_LATTICE_HPP
#define LATNORM_LATTICE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latnorm/element_set.hpp"
#include "latnorm/error.hpp"

namespace latnorm {

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;
using CoverPair = std::pair<ElementId, ElementId>;

/// Largest element count any lattice may have; meet and join tables are
/// stored densely.
inline constexpr std::size_t kMaxElements = 1024;

/// An immutable finite lattice. Elements are identified by their index in
/// the order they were declared; every table and export follows that order.
class FiniteLattice {
 public:
  /// Builds a lattice from its order relation: `down[y]` holds every x <= y.
  /// `cover_order`, when given, fixes the order in which covers are listed;
  /// pairs in it that are not covers are dropped.
  static LatticePtr from_order(std::vector<std::string> names,
                               std::vector<DynamicBitset> down,
                               const std::vector<CoverPair>& cover_order = {}) {
    check_names(names);
    const std::size_t n = names.size();
    if (down.size() != n)
      throw Error(ErrorKind::InvalidArgument, "order relation has wrong arity");
    for (std::size_t y = 0; y < n; ++y) {
      if (down[y].size() != n)
        throw Error(ErrorKind::InvalidArgument, "order relation has wrong arity");
      if (!down[y].test(y))
        throw Error(ErrorKind::InvalidArgument, "order is not reflexive",
                    {names[y]});
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (x == y || !down[y].test(x)) continue;
        if (down[x].test(y))
          throw Error(ErrorKind::CycleDetected,
                      "elements " + names[x] + " and " + names[y] + " are below each other",
                      {names[x], names[y]});
        if (!down[x].is_subset_of(down[y]))
          throw Error(ErrorKind::InvalidArgument, "order is not transitive",
                      {names[x], names[y]});
      }
    }
    auto lattice = std::shared_ptr<FiniteLattice>(new FiniteLattice());
    lattice->build(std::move(names), std::move(down), cover_order);
    return lattice;
  }

  std::uint64_t id() const noexcept { return id_; }
  std::size_t size() const noexcept { return names_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId x) const { return names_.at(x); }

  std::optional<ElementId> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  ElementId id_of(std::string_view label) const {
    if (auto x = find(label)) return *x;
    throw Error(ErrorKind::UnknownLabel, "no element named '" + std::string(label) + "'",
                {std::string(label)});
  }

  bool leq(ElementId x, ElementId y) const noexcept { return down_[y].test(x); }
  bool lt(ElementId x, ElementId y) const noexcept { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const noexcept {
    return leq(x, y) || leq(y, x);
  }
  bool covers(ElementId lower, ElementId upper) const noexcept {
    return lt(lower, upper) &&
           (up_[lower] & down_[upper]).count() == 2;
  }

  ElementId meet(ElementId x, ElementId y) const noexcept { return meet_[x * size() + y]; }
  ElementId join(ElementId x, ElementId y) const noexcept { return join_[x * size() + y]; }
  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  const std::vector<CoverPair>& cover_pairs() const noexcept { return covers_; }
  const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_covers_.at(x); }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_covers_.at(x); }

  /// Elements listed so that x < y implies x comes first.
  const std::vector<ElementId>& linear_extension() const noexcept { return linear_; }

  const DynamicBitset& down_set(ElementId x) const { return down_.at(x); }
  const DynamicBitset& up_set(ElementId x) const { return up_.at(x); }

  ElementSet empty_set() const { return ElementSet(id_, size()); }
  ElementSet full_set() const {
    ElementSet s = empty_set();
    for (ElementId x = 0; x < size(); ++x) s.insert(x);
    return s;
  }
  ElementSet set_of(std::initializer_list<ElementId> ids) const {
    return set_of(std::vector<ElementId>(ids));
  }
  ElementSet set_of(const std::vector<ElementId>& ids) const {
    ElementSet s = empty_set();
    for (auto x : ids) s.insert(x);
    return s;
  }
  ElementSet set_of_names(const std::vector<std::string>& labels) const {
    ElementSet s = empty_set();
    for (const auto& l : labels) s.insert(id_of(l));
    return s;
  }
  ElementSet as_set(const DynamicBitset& bits) const {
    if (bits.size() != size())
      throw Error(ErrorKind::LatticeMismatch, "bitset size differs from lattice size");
    return ElementSet(id_, bits);
  }
  void check_owns(const ElementSet& s) const {
    if (s.lattice_id() != id_ || s.universe() != size())
      throw Error(ErrorKind::LatticeMismatch, "element set belongs to another lattice");
  }

  ElementId join_of(const ElementSet& s) const {
    check_owns(s);
    ElementId acc = bottom_;
    s.bits().for_each([&](std::size_t x) { acc = join(acc, static_cast<ElementId>(x)); });
    return acc;
  }
  ElementId meet_of(const ElementSet& s) const {
    check_owns(s);
    ElementId acc = top_;
    s.bits().for_each([&](std::size_t x) { acc = meet(acc, static_cast<ElementId>(x)); });
    return acc;
  }

  /// Atoms as a raw bitset over element ids.
  const DynamicBitset& atom_bits() const noexcept { return atoms_; }
  /// Atoms below x as a raw bitset over element ids.
  DynamicBitset atom_bits_below(ElementId x) const { return atoms_ & down_.at(x); }

  std::vector<std::string> labels(const ElementSet& s) const {
    check_owns(s);
    std::vector<std::string> out;
    for (auto x : s.members()) out.push_back(names_[x]);
    return out;
  }

 private:
  FiniteLattice() = default;

  static void check_names(const std::vector<std::string>& names) {
    if (names.empty())
      throw Error(ErrorKind::NoBottom, "a lattice needs at least one element");
    if (names.size() > kMaxElements)
      throw Error(ErrorKind::BoundExceeded,
                  "lattice has " + std::to_string(names.size()) +
                      " elements; the limit is " + std::to_string(kMaxElements));
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second)
        throw Error(ErrorKind::DuplicateLabel, "label '" + n + "' declared twice", {n});
    }
  }

  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
  }

  void build(std::vector<std::string> names, std::vector<DynamicBitset> down,
             const std::vector<CoverPair>& cover_order) {
    id_ = next_id();
    names_ = std::move(names);
    down_ = std::move(down);
    const std::size_t n = names_.size();
    for (ElementId i = 0; i < n; ++i) index_.emplace(names_[i], i);

    up_.assign(n, DynamicBitset(n));
    for (std::size_t y = 0; y < n; ++y)
      down_[y].for_each([&](std::size_t x) { up_[x].set(y); });

    // x < y forces |down(x)| < |down(y)|, so sorting by down-set size is a
    // linear extension.
    std::vector<std::size_t> down_count(n);
    for (std::size_t x = 0; x < n; ++x) down_count[x] = down_[x].count();
    linear_.resize(n);
    std::iota(linear_.begin(), linear_.end(), ElementId{0});
    std::stable_sort(linear_.begin(), linear_.end(), [&](ElementId a, ElementId b) {
      return down_count[a] < down_count[b];
    });

    std::optional<ElementId> bottom, top;
    for (ElementId x = 0; x < n; ++x) {
      if (up_[x].count() == n) bottom = x;
      if (down_count[x] == n) top = x;
    }
    if (!bottom) throw Error(ErrorKind::NoBottom, "no element lies below all others");
    if (!top) throw Error(ErrorKind::NoTop, "no element lies above all others");
    bottom_ = *bottom;
    top_ = *top;

    // Meets and joins are found in linear-extension coordinates: the greatest
    // lower bound, if it exists, is the last common lower bound.
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[linear_[p]] = p;
    std::vector<DynamicBitset> down_pos(n, DynamicBitset(n)), up_pos(n, DynamicBitset(n));
    for (std::size_t x = 0; x < n; ++x) {
      down_[x].for_each([&](std::size_t z) { down_pos[x].set(pos[z]); });
      up_[x].for_each([&](std::size_t z) { up_pos[x].set(pos[z]); });
    }
    meet_.assign(n * n, 0);
    join_.assign(n * n, 0);
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = x; y < n; ++y) {
        auto lower = down_pos[x] & down_pos[y];
        auto upper = up_pos[x] & up_pos[y];
        auto lo = lower.last();
        auto hi = upper.first();
        const ElementId m = lo ? linear_[*lo] : 0;
        const ElementId j = hi ? linear_[*hi] : 0;
        if (!lo || down_count[m] != lower.count())
          throw Error(ErrorKind::NotALattice,
                      "elements " + names_[x] + " and " + names_[y] +
                          " have no greatest lower bound",
                      {names_[x], names_[y]});
        if (!hi || up_[j].count() != upper.count())
          throw Error(ErrorKind::NotALattice,
                      "elements " + names_[x] + " and " + names_[y] +
                          " have no least upper bound",
                      {names_[x], names_[y]});
        meet_[x * n + y] = meet_[y * n + x] = m;
        join_[x * n + y] = join_[y * n + x] = j;
      }
    }

    lower_covers_.assign(n, {});
    upper_covers_.assign(n, {});
    std::vector<CoverPair> all;
    for (ElementId y = 0; y < n; ++y) {
      down_[y].for_each([&](std::size_t x) {
        if (x != y && (up_[x] & down_[y]).count() == 2)
          all.emplace_back(static_cast<ElementId>(x), y);
      });
    }
    std::sort(all.begin(), all.end());
    std::set<CoverPair> pending(all.begin(), all.end());
    for (const auto& c : cover_order) {
      if (pending.erase(c) != 0) covers_.push_back(c);
    }
    for (const auto& c : all)
      if (pending.count(c) != 0) covers_.push_back(c);
    for (const auto& [lo, hi] : covers_) {
      lower_covers_[hi].push_back(lo);
      upper_covers_[lo].push_back(hi);
    }
    for (auto& v : lower_covers_) std::sort(v.begin(), v.end());
    for (auto& v : upper_covers_) std::sort(v.begin(), v.end());

    atoms_ = DynamicBitset(n);
    if (n > 1)
      for (auto a : upper_covers_[bottom_]) atoms_.set(a);
  }

  std::uint64_t id_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<DynamicBitset> down_, up_;
  std::vector<ElementId> linear_;
  std::vector<ElementId> meet_, join_;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<ElementId>> lower_covers_, upper_covers_;
  DynamicBitset atoms_;
  ElementId bottom_ = 0, top_ = 0;
};

/// Builds a lattice from labels and its Hasse diagram. Covers that are
/// implied by transitivity are dropped; the rest keep their input order.
inline LatticePtr lattice_from_covers(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& cover_labels) {
  if (names.empty())
    throw Error(ErrorKind::NoBottom, "a lattice needs at least one element");
  if (names.size() > kMaxElements)
    throw Error(ErrorKind::BoundExceeded, "too many elements");
  std::unordered_map<std::string, ElementId> index;
  for (ElementId i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second)
      throw Error(ErrorKind::DuplicateLabel, "label '" + names[i] + "' declared twice",
                  {names[i]});
  }
  const std::size_t n = names.size();
  std::vector<CoverPair> edges;
  std::vector<std::vector<ElementId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [lo, hi] : cover_labels) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end())
      throw Error(ErrorKind::UnknownLabel, "cover references unknown label '" + lo + "'", {lo});
    if (b == index.end())
      throw Error(ErrorKind::UnknownLabel, "cover references unknown label '" + hi + "'", {hi});
    if (a->second == b->second)
      throw Error(ErrorKind::CycleDetected, "element " + lo + " covers itself", {lo, hi});
    edges.emplace_back(a->second, b->second);
    succ[a->second].push_back(b->second);
    ++indegree[b->second];
  }
  // Kahn's algorithm; anything left unvisited sits on a cycle.
  std::vector<ElementId> order;
  std::vector<ElementId> ready;
  for (ElementId x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  while (!ready.empty()) {
    const ElementId x = ready.back();
    ready.pop_back();
    order.push_back(x);
    for (auto y : succ[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  if (order.size() != n) {
    std::vector<std::string> stuck;
    for (ElementId x = 0; x < n; ++x)
      if (indegree[x] != 0) stuck.push_back(names[x]);
    throw Error(ErrorKind::CycleDetected, "cover relation contains a cycle", stuck);
  }
  std::vector<DynamicBitset> down(n, DynamicBitset(n));
  for (ElementId x = 0; x < n; ++x) down[x].set(x);
  for (auto x : order)
    for (auto y : succ[x]) down[y] |= down[x];
  return FiniteLattice::from_order(names, std::move(down), edges);
}

inline ElementSet atoms(const FiniteLattice& L) { return L.as_set(L.atom_bits()); }

inline ElementSet join_irreducibles(const FiniteLattice& L) {
  ElementSet out = L.empty_set();
  for (ElementId x = 0; x < L.size(); ++x)
    if (x != L.bottom() && L.lower_covers(x).size() == 1) out.insert(x);
  return out;
}

inline ElementSet atoms_below(const FiniteLattice& L, ElementId x) {
  return L.as_set(L.atom_bits_below(x));
}

inline ElementSet ji_below(const FiniteLattice& L, ElementId x) {
  return join_irreducibles(L) & L.as_set(L.down_set(x));
}

/// Elements in J(L) that are not atoms.
inline ElementSet non_atomic_join_irreducibles(const FiniteLattice& L) {
  return join_irreducibles(L) - atoms(L);
}

/// Number of edges on a longest chain from bottom to top.
inline std::size_t length(const FiniteLattice& L) {
  std::vector<std::size_t> height(L.size(), 0);
  for (auto y : L.linear_extension())
    for (auto x : L.lower_covers(y)) height[y] = std::max(height[y], height[x] + 1);
  return height[L.top()];
}

inline bool is_atomistic(const FiniteLattice& L) {
  for (ElementId x = 0; x < L.size(); ++x)
    if (L.join_of(atoms_below(L, x)) != x) return false;
  return true;
}

/// True iff L is atomistic and A(x v y) = A(x) u A(y) everywhere, which
/// makes x -> A(x) an isomorphism onto the powerset of the atoms.
inline bool is_boolean_atomistic(const FiniteLattice& L) {
  if (!is_atomistic(L)) return false;
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId y = x + 1; y < L.size(); ++y)
      if (L.atom_bits_below(L.join(x, y)) != (L.atom_bits_below(x) | L.atom_bits_below(y)))
        return false;
  return true;
}

/// S is independent when a ^ V(S \ a) = 0 for every a in S.
inline bool is_independent(const FiniteLattice& L, const ElementSet& s) {
  L.check_owns(s);
  const auto members = s.members();
  for (auto a : members) {
    ElementId rest = L.bottom();
    for (auto b : members)
      if (b != a) rest = L.join(rest, b);
    if (L.meet(a, rest) != L.bottom()) return false;
  }
  return true;
}

/// Limit on |base| for maximal_independent_subsets.
inline constexpr std::size_t kMaxIndependenceBase = 24;

/// Independent subsets of `base` to which no further member of `base` can
/// be added. Subsets of independent sets are independent, so a depth-first
/// search that only extends independent sets reaches all of them.
inline std::vector<ElementSet> maximal_independent_subsets(const FiniteLattice& L,
                                                           const ElementSet& base) {
  L.check_owns(base);
  const auto pool = base.members();
  if (pool.size() > kMaxIndependenceBase)
    throw Error(ErrorKind::BoundExceeded, "independence search base too large");
  std::vector<ElementSet> found;
  ElementSet current = L.empty_set();
  std::function<void(std::size_t)> grow = [&](std::size_t next) {
    if (next == pool.size()) {
      for (auto x : pool) {
        if (current.contains(x)) continue;
        ElementSet bigger = current;
        bigger.insert(x);
        if (is_independent(L, bigger)) return;
      }
      found.push_back(current);
      return;
    }
    const ElementId x = pool[next];
    current.insert(x);
    if (is_independent(L, current)) grow(next + 1);
    current.erase(x);
    grow(next + 1);
  };
  grow(0);
  return found;
}

/// Largest k accepted by powerset_lattice.
inline constexpr std::size_t kMaxPowersetAtoms = 10;

/// The Boolean lattice of subsets of a k-element set. Element ids are the
/// subset bitmasks; the empty set is named "0", the full set "1", and the
/// rest spell their members with letters a, b, c, ...
inline LatticePtr powerset_lattice(std::size_t k) {
  if (k > kMaxPowersetAtoms)
    throw Error(ErrorKind::BoundExceeded,
                "powerset of " + std::to_string(k) + " atoms exceeds the limit of " +
                    std::to_string(kMaxPowersetAtoms));
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names(n);
  for (std::size_t m = 0; m < n; ++m) {
    if (m == 0) {
      names[m] = "0";
    } else if (m == n - 1) {
      names[m] = "1";
    } else {
      for (std::size_t i = 0; i < k; ++i)
        if ((m >> i) & 1U) names[m].push_back(static_cast<char>('a' + i));
    }
  }
  std::vector<DynamicBitset> down(n, DynamicBitset(n));
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t s = m;; s = (s - 1) & m) {
      down[m].set(s);
      if (s == 0) break;
    }
  }
  return FiniteLattice::from_order(std::move(names), std::move(down));
}

/// Order-sensitive hash of the labelled cover relation, as 16 hex digits.
inline std::string fingerprint(const FiniteLattice& L) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& n : L.names()) feed(n);
  auto covers = L.cover_pairs();
  std::sort(covers.begin(), covers.end());
  for (const auto& [lo, hi] : covers) {
    feed(std::to_string(lo));
    feed(std::to_string(hi));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace latnorm

#endif  // LATNORM_LATTICE_HPP
