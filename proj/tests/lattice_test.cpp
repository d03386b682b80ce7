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

#include <gtest/gtest.h>

#include "latnorm.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace latnorm;

namespace {

std::vector<std::string> names_of(const FiniteLattice& L, const ElementSet& s) { return L.labels(s); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

}  // namespace

TEST(LatticeFromCovers, TwinLattice) {
  auto L = corpus::twin();
  EXPECT_EQ(L->size(), 5u);
  EXPECT_EQ(L->name(L->bottom()), "0");
  EXPECT_EQ(L->name(L->top()), "1");
  const auto d = L->id_of("d"), c = L->id_of("c"), b = L->id_of("b");
  EXPECT_EQ(L->meet(d, c), b);
  EXPECT_EQ(L->join(d, c), L->top());
  EXPECT_FALSE(L->comparable(d, c));
}

TEST(LatticeFromCovers, TwoChain) {
  auto L = corpus::chain(2);
  EXPECT_EQ(L->size(), 2u);
  EXPECT_TRUE(L->covers(L->bottom(), L->top()));
}

TEST(LatticeFromCovers, DiamondFragmentNeedsTheMissingCover) {
  // Without (b, 1) the element b has nothing above it but itself.
  EXPECT_EQ(kind_of([] { lattice_from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}}); }),
            ErrorKind::NoTop);
  auto L = lattice_from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  EXPECT_TRUE(is_boolean_atomistic(*L));
  EXPECT_EQ(atoms(*L).size(), 2u);
}

TEST(LatticeFromCovers, Errors) {
  EXPECT_EQ(kind_of([] { lattice_from_covers({"0", "0"}, {}); }), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of([] { lattice_from_covers({"0", "1"}, {{"0", "2"}}); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([] { lattice_from_covers({"0", "a", "1"}, {{"0", "a"}, {"a", "0"}, {"a", "1"}}); }),
            ErrorKind::CycleDetected);
  EXPECT_EQ(kind_of([] { lattice_from_covers({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}); }),
            ErrorKind::NoTop);
  EXPECT_EQ(kind_of([] { lattice_from_covers({"a", "b", "1"}, {{"a", "1"}, {"b", "1"}}); }),
            ErrorKind::NoBottom);
  // Two incomparable upper bounds x, y of a and b, both below 1.
  EXPECT_EQ(kind_of([] {
              lattice_from_covers({"0", "a", "b", "x", "y", "1"},
                                  {{"0", "a"}, {"0", "b"}, {"a", "x"}, {"b", "x"}, {"a", "y"},
                                   {"b", "y"}, {"x", "1"}, {"y", "1"}});
            }),
            ErrorKind::NotALattice);
}

TEST(LatticeFromCovers, NotALatticeNamesThePair) {
  try {
    lattice_from_covers({"0", "a", "b", "x", "y", "1"},
                        {{"0", "a"}, {"0", "b"}, {"a", "x"}, {"b", "x"}, {"a", "y"}, {"b", "y"},
                         {"x", "1"}, {"y", "1"}});
    FAIL();
  } catch (const Error& e) {
    ASSERT_EQ(e.witness().size(), 2u);
  }
}

TEST(LatticeFromCovers, RedundantCoverIsDropped) {
  auto L = lattice_from_covers({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"0", "1"}});
  EXPECT_EQ(L->cover_pairs().size(), 2u);
}

TEST(LatticeFromCovers, CoverRoundTrip) {
  for (const auto& [name, L] : corpus::general()) {
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [lo, hi] : L->cover_pairs()) covers.emplace_back(L->name(lo), L->name(hi));
    auto again = lattice_from_covers(L->names(), covers);
    EXPECT_EQ(again->cover_pairs(), L->cover_pairs()) << name;
    // Covers are exactly the transitive reduction.
    for (ElementId x = 0; x < L->size(); ++x)
      for (ElementId y = 0; y < L->size(); ++y) {
        bool reduced = L->lt(x, y);
        for (ElementId z = 0; z < L->size() && reduced; ++z)
          if (L->lt(x, z) && L->lt(z, y)) reduced = false;
        EXPECT_EQ(L->covers(x, y), reduced) << name;
      }
  }
}

TEST(LatticeLaws, MeetJoinAgreeWithOrder) {
  for (const auto& [name, L] : corpus::general()) {
    const auto n = L->size();
    for (ElementId x = 0; x < n; ++x) {
      EXPECT_TRUE(L->leq(L->bottom(), x));
      EXPECT_TRUE(L->leq(x, L->top()));
      for (ElementId y = 0; y < n; ++y) {
        const auto m = L->meet(x, y), j = L->join(x, y);
        EXPECT_EQ(m, L->meet(y, x));
        EXPECT_EQ(j, L->join(y, x));
        EXPECT_TRUE(L->leq(m, x) && L->leq(m, y));
        EXPECT_TRUE(L->leq(x, j) && L->leq(y, j));
        EXPECT_EQ(L->join(x, L->meet(x, y)), x);
        EXPECT_EQ(L->meet(x, L->join(x, y)), x);
        for (ElementId z = 0; z < n; ++z) {
          if (L->leq(z, x) && L->leq(z, y)) {
            EXPECT_TRUE(L->leq(z, m)) << name;
          }
          if (L->leq(x, z) && L->leq(y, z)) {
            EXPECT_TRUE(L->leq(j, z)) << name;
          }
        }
        // A(x ^ y) = A(x) n A(y)
        EXPECT_EQ(atoms_below(*L, m), atoms_below(*L, x) & atoms_below(*L, y)) << name;
      }
    }
  }
}

TEST(LatticeLaws, LinearExtensionRespectsOrder) {
  for (const auto& [name, L] : corpus::general()) {
    std::vector<std::size_t> pos(L->size());
    const auto& ext = L->linear_extension();
    for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
    for (ElementId x = 0; x < L->size(); ++x)
      for (ElementId y = 0; y < L->size(); ++y)
        if (L->lt(x, y)) {
          EXPECT_LT(pos[x], pos[y]) << name;
        }
  }
}

TEST(Atoms, TwinLattice) {
  auto L = corpus::twin();
  EXPECT_EQ(names_of(*L, atoms(*L)), (std::vector<std::string>{"b"}));
  EXPECT_EQ(names_of(*L, join_irreducibles(*L)), (std::vector<std::string>{"b", "d", "c"}));
  EXPECT_EQ(names_of(*L, non_atomic_join_irreducibles(*L)), (std::vector<std::string>{"d", "c"}));
  EXPECT_EQ(names_of(*L, atoms_below(*L, L->id_of("c"))), (std::vector<std::string>{"b"}));
  EXPECT_EQ(names_of(*L, ji_below(*L, L->id_of("c"))), (std::vector<std::string>{"b", "c"}));
}

TEST(Atoms, TwoChain) {
  auto L = corpus::chain(2);
  EXPECT_EQ(names_of(*L, atoms(*L)), (std::vector<std::string>{"1"}));
  EXPECT_EQ(names_of(*L, join_irreducibles(*L)), (std::vector<std::string>{"1"}));
}

TEST(Atoms, TwinExtension) {
  auto X = corpus::twin_ext();
  EXPECT_EQ(names_of(*X, atoms(*X)), (std::vector<std::string>{"b", "w_d", "w_c"}));
}

TEST(Atoms, JoinIrreducibleByDefinition) {
  for (const auto& [name, L] : corpus::general()) {
    const auto J = join_irreducibles(*L);
    for (ElementId q = 0; q < L->size(); ++q) {
      bool irreducible = q != L->bottom();
      for (ElementId x = 0; x < L->size() && irreducible; ++x)
        for (ElementId y = 0; y < L->size(); ++y)
          if (L->join(x, y) == q && x != q && y != q) irreducible = false;
      EXPECT_EQ(J.contains(q), irreducible) << name << " " << L->name(q);
    }
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(length(*corpus::twin()), 3u);
  EXPECT_EQ(length(*corpus::chain(2)), 1u);
  EXPECT_EQ(length(*powerset_lattice(3)), 3u);
  EXPECT_EQ(length(*corpus::chain(5)), 4u);
  EXPECT_EQ(length(*corpus::n5()), 3u);
}

TEST(Atomistic, Examples) {
  EXPECT_FALSE(is_atomistic(*corpus::twin()));
  EXPECT_TRUE(is_atomistic(*corpus::twin_ext()));
  EXPECT_TRUE(is_atomistic(*corpus::m3()));
  EXPECT_FALSE(is_atomistic(*corpus::n5()));
  EXPECT_TRUE(is_atomistic(*corpus::skewed()));
}

TEST(Boolean, Examples) {
  EXPECT_TRUE(is_boolean_atomistic(*powerset_lattice(3)));
  EXPECT_FALSE(is_boolean_atomistic(*corpus::m3()));
  EXPECT_FALSE(is_boolean_atomistic(*corpus::twin_ext()));
  EXPECT_FALSE(is_boolean_atomistic(*corpus::twin()));
}

TEST(Boolean, TwinExtensionWitness) {
  auto X = corpus::twin_ext();
  const auto wc = X->id_of("w_c"), wd = X->id_of("w_d");
  EXPECT_TRUE(atoms_below(*X, X->join(wc, wd)).contains(X->id_of("b")));
}

TEST(Boolean, BinaryCheckAgreesWithSubsets) {
  auto lattices = corpus::general();
  for (const auto& n : corpus::atomistic()) lattices.push_back(n);
  lattices.push_back({"2^0", powerset_lattice(0)});
  for (const auto& [name, L] : lattices) {
    if (L->size() > 10) continue;
    EXPECT_EQ(is_boolean_atomistic(*L), oracle::boolean_by_subsets(*L)) << name;
  }
}

TEST(Powerset, Shape) {
  EXPECT_EQ(powerset_lattice(0)->size(), 1u);
  EXPECT_EQ(powerset_lattice(1)->size(), 2u);
  auto P3 = powerset_lattice(3);
  EXPECT_EQ(P3->size(), 8u);
  EXPECT_EQ(atoms(*P3).size(), 3u);
  EXPECT_EQ(length(*P3), 3u);
  for (std::size_t k = 0; k <= 5; ++k) {
    auto P = powerset_lattice(k);
    EXPECT_TRUE(is_atomistic(*P));
    EXPECT_TRUE(is_boolean_atomistic(*P));
    EXPECT_EQ(P->size(), std::size_t{1} << atoms(*P).size());
    // x -> A(x) is a bijection preserving joins and meets.
    std::set<std::vector<ElementId>> images;
    for (ElementId x = 0; x < P->size(); ++x) {
      images.insert(atoms_below(*P, x).members());
      for (ElementId y = 0; y < P->size(); ++y) {
        EXPECT_EQ(atoms_below(*P, P->join(x, y)), atoms_below(*P, x) | atoms_below(*P, y));
        EXPECT_EQ(atoms_below(*P, P->meet(x, y)), atoms_below(*P, x) & atoms_below(*P, y));
      }
    }
    EXPECT_EQ(images.size(), P->size());
  }
  EXPECT_EQ(kind_of([] { powerset_lattice(kMaxPowersetAtoms + 1); }), ErrorKind::BoundExceeded);
}

TEST(Independence, Examples) {
  auto X = corpus::twin_ext();
  // w_c v w_d = 1 here, so b ^ V{w_c, w_d} = b.
  EXPECT_EQ(X->join(X->id_of("w_c"), X->id_of("w_d")), X->top());
  EXPECT_FALSE(is_independent(*X, X->set_of_names({"w_c", "w_d", "b"})));
  EXPECT_TRUE(is_independent(*X, X->set_of_names({"b", "w_d"})));
  EXPECT_TRUE(is_independent(*X, X->set_of_names({"w_c", "w_d"})));
  auto M = corpus::m3();
  EXPECT_TRUE(is_independent(*M, M->set_of_names({"a"})));
  EXPECT_FALSE(is_independent(*M, M->set_of_names({"a", "b", "c"})));
  EXPECT_TRUE(is_independent(*M, M->set_of_names({"a", "b"})));
}

TEST(Independence, MaximalSubsetsOfM3Atoms) {
  auto M = corpus::m3();
  auto found = maximal_independent_subsets(*M, atoms(*M));
  EXPECT_EQ(found.size(), 3u);
  for (const auto& s : found) EXPECT_EQ(s.size(), 2u);
}

TEST(Independence, MaximalSubsetsByBruteForce) {
  for (const auto& [name, L] : corpus::atomistic()) {
    const auto base = atoms(*L).members();
    std::set<std::vector<ElementId>> expected;
    const std::uint32_t m = 1U << base.size();
    auto subset = [&](std::uint32_t mask) {
      ElementSet s = L->empty_set();
      for (std::size_t i = 0; i < base.size(); ++i)
        if ((mask >> i) & 1U) s.insert(base[i]);
      return s;
    };
    for (std::uint32_t mask = 0; mask < m; ++mask) {
      if (!is_independent(*L, subset(mask))) continue;
      bool maximal = true;
      for (std::size_t i = 0; i < base.size() && maximal; ++i)
        if (!((mask >> i) & 1U) && is_independent(*L, subset(mask | (1U << i)))) maximal = false;
      if (maximal) expected.insert(subset(mask).members());
    }
    std::set<std::vector<ElementId>> got;
    for (const auto& s : maximal_independent_subsets(*L, atoms(*L))) got.insert(s.members());
    EXPECT_EQ(got, expected) << name;
  }
}

TEST(ElementSets, CrossLatticeUseIsRejected) {
  auto L = corpus::twin();
  auto X = corpus::twin_ext();
  EXPECT_EQ(kind_of([&] { (void)(atoms(*L) | atoms(*X)); }), ErrorKind::LatticeMismatch);
  EXPECT_EQ(kind_of([&] { is_independent(*X, atoms(*L)); }), ErrorKind::LatticeMismatch);
}

TEST(Fingerprint, DependsOnStructureAndLabels) {
  EXPECT_EQ(fingerprint(*corpus::twin()), fingerprint(*corpus::twin()));
  EXPECT_NE(fingerprint(*corpus::twin()), fingerprint(*corpus::m3()));
  EXPECT_EQ(fingerprint(*corpus::twin()).size(), 16u);
}
