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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "latnorm.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace latnorm;

namespace {

using CellSet = std::set<std::vector<ElementId>>;

/// Every symmetric filling of the interior cells with any element, kept when
/// the literal axioms hold. Only usable for a handful of interior cells.
CellSet naive_tnorms(const LatticePtr& L) {
  const std::size_t n = L->size();
  std::vector<ElementId> interior;
  for (ElementId x = 0; x < n; ++x)
    if (x != L->top() && x != L->bottom()) interior.push_back(x);
  std::vector<std::pair<ElementId, ElementId>> cells;
  for (std::size_t i = 0; i < interior.size(); ++i)
    for (std::size_t j = i; j < interior.size(); ++j) cells.emplace_back(interior[i], interior[j]);
  std::vector<ElementId> base(n * n, L->bottom());
  for (ElementId x = 0; x < n; ++x) {
    base[x * n + L->top()] = x;
    base[L->top() * n + x] = x;
  }
  CellSet out;
  std::vector<ElementId> pick(cells.size(), 0);
  while (true) {
    auto t = base;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      t[cells[k].first * n + cells[k].second] = pick[k];
      t[cells[k].second * n + cells[k].first] = pick[k];
    }
    TNormTable table(L, t);
    if (oracle::is_tnorm(table)) out.insert(t);
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == n) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

CellSet cells_of(const std::vector<TNormTable>& ts) {
  CellSet out;
  for (const auto& t : ts) out.insert(t.cells());
  return out;
}

}  // namespace

TEST(Enumerate, SmallChains) {
  EXPECT_EQ(enumerate_all_tnorms(corpus::chain(2)).size(), 1u);
  EXPECT_EQ(enumerate_all_tnorms(corpus::chain(3)).size(), 2u);
}

TEST(Enumerate, MatchesNaiveSearch) {
  for (auto L : {corpus::chain(3), corpus::chain(4), corpus::chain(5), powerset_lattice(2), corpus::m3(),
                 corpus::n5(), corpus::twin()}) {
    auto fast = cells_of(enumerate_all_tnorms(L));
    EXPECT_EQ(fast, naive_tnorms(L)) << L->size();
  }
}

TEST(Enumerate, StreamedTablesVerify) {
  for (auto L : {powerset_lattice(3), corpus::m4(), corpus::twin_ext(), corpus::n5(), corpus::skewed()}) {
    std::size_t seen = 0;
    for_each_tnorm(L, {}, [&](const TNormTable& t) {
      ++seen;
      EXPECT_TRUE(verify_tnorm(t).ok());
    });
    EXPECT_GT(seen, 0u);
  }
}

TEST(Enumerate, CellOrderDoesNotMatter) {
  for (auto L : {powerset_lattice(3), corpus::m4(), corpus::twin_ext(), corpus::skewed(), corpus::m3_doubled()}) {
    EXPECT_EQ(cells_of(enumerate_all_tnorms(L, {}, CellOrder::primary)),
              cells_of(enumerate_all_tnorms(L, {}, CellOrder::alternate)));
  }
}

TEST(Enumerate, SortedAndUnique) {
  auto all = enumerate_all_tnorms(corpus::twin_ext());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].cells(), all[i].cells());
}

TEST(Enumerate, ContainsGeneratedFamily) {
  auto L = corpus::twin_ext();
  auto all = cells_of(enumerate_all_tnorms(L));
  for (const auto& g : generated_family(L)) EXPECT_EQ(all.count(g.lifted.cells()), 1u);
  EXPECT_EQ(all.count(t_min(L).cells()), 1u);
  EXPECT_EQ(all.count(t_drastic(L).cells()), 1u);
}

TEST(Enumerate, Bounds) {
  try {
    enumerate_all_tnorms(corpus::chain(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
  OracleLimits tight;
  tight.max_tables = 10;
  try {
    enumerate_all_tnorms(powerset_lattice(3), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
  OracleLimits wide;
  wide.max_elements = 9;
  EXPECT_NO_THROW(enumerate_all_tnorms(corpus::chain(9), wide));
}

TEST(Census, Boolean) {
  auto r2 = census(powerset_lattice(2));
  EXPECT_EQ(r2.counts.left_semicontinuous, 4u);
  EXPECT_EQ(r2.counts.left_continuous, 1u);
  EXPECT_EQ(r2.counts.generated, 4u);
  auto r3 = census(powerset_lattice(3));
  EXPECT_EQ(r3.counts.left_semicontinuous, 8u);
  EXPECT_EQ(r3.counts.left_continuous, 1u);
  EXPECT_EQ(r3.counts.generated, 8u);
}

TEST(Census, NoLeftContinuousOnNonDistributive) {
  EXPECT_EQ(census(corpus::m3()).counts.left_continuous, 0u);
  EXPECT_EQ(census(corpus::twin_ext()).counts.left_continuous, 0u);
}

TEST(Census, CountsAgreeWithOracles) {
  for (const auto& [name, L] : corpus::general()) {
    if (L->size() > 8) continue;
    auto r = census(L);
    std::size_t lsc = 0, lc = 0, rc = 0, both = 0;
    for (const auto& t : enumerate_all_tnorms(L)) {
      lsc += oracle::left_semicontinuous(t);
      const bool l = oracle::left_continuous(t), rr = oracle::right_continuous(t);
      lc += l;
      rc += rr;
      both += l && rr;
    }
    EXPECT_EQ(r.counts.left_semicontinuous, lsc) << name;
    EXPECT_EQ(r.counts.left_continuous, lc) << name;
    EXPECT_EQ(r.counts.right_continuous, rc) << name;
    EXPECT_EQ(r.counts.continuous, both) << name;
    EXPECT_LE(r.counts.left_continuous, r.counts.left_semicontinuous) << name;
    EXPECT_LE(r.counts.left_semicontinuous, r.total) << name;
    EXPECT_EQ(r.witnesses["left_continuous"].is_null(), lc == 0) << name;
  }
}

TEST(Census, JsonRoundTrip) {
  auto r = census(corpus::m3());
  auto j = census_to_json(r);
  EXPECT_EQ(census_to_json(census_from_json(j)), j);
  EXPECT_EQ(j["lattice_hash"], fingerprint(*corpus::m3()));
  EXPECT_THROW(census_from_json(nlohmann::json{{"total", 3}}), Error);
}

TEST(Census, Cache) {
  const auto dir = std::filesystem::temp_directory_path() / "latnorm_cache_test";
  std::filesystem::remove_all(dir);
  auto L = corpus::m3();
  auto first = cached_census(L, dir);
  const auto file = dir / ("census-" + fingerprint(*L) + ".json");
  ASSERT_TRUE(std::filesystem::exists(file));
  EXPECT_EQ(census_to_json(cached_census(L, dir)), census_to_json(first));
  {
    // A stale entry is ignored.
    auto doc = nlohmann::json{{"cache_version", 0}, {"report", census_to_json(census(powerset_lattice(2)))}};
    std::ofstream(file) << doc.dump();
  }
  EXPECT_EQ(census_to_json(cached_census(L, dir)), census_to_json(first));
  std::ofstream(file) << "not json";
  EXPECT_EQ(census_to_json(cached_census(L, dir)), census_to_json(first));
  std::filesystem::remove_all(dir);
}

TEST(OracleVsConstruction, AtomisticCorpus) {
  for (const auto& [name, L] : corpus::atomistic()) {
    auto r = oracle_vs_construction(L);
    EXPECT_TRUE(r.ok()) << name << ": " << (r.failures.empty() ? "" : r.failures[0]);
    // A lattice of length one carries a single t-norm.
    const std::size_t expected = length(*L) < 2 ? 1 : std::size_t{1} << atoms(*L).size();
    EXPECT_EQ(r.c_brute_count, expected) << name;
    if (L->size() <= 8) {
      EXPECT_TRUE(r.lsc_matches_condition.has_value()) << name;
    }
  }
}

TEST(OracleVsConstruction, BooleanFamilies) {
  for (std::size_t k : {1, 2, 3}) {
    auto r = oracle_vs_construction(powerset_lattice(k));
    ASSERT_TRUE(r.boolean_lsc_matches_family.has_value());
    EXPECT_TRUE(*r.boolean_lsc_matches_family);
  }
  EXPECT_FALSE(oracle_vs_construction(corpus::m3()).boolean_lsc_matches_family.has_value());
}
