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

// Exhaustive search for every t-norm on a small lattice, straight from the
// axioms. Nothing here uses the atom-based construction; it is the ground
// truth the construction is measured against.

#ifndef LATNORM_ORACLE_HPP
#define LATNORM_ORACLE_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "latnorm/atomic.hpp"
#include "latnorm/error.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/table_io.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

struct OracleLimits {
  std::size_t max_elements = 8;
  std::size_t max_tables = 1'000'000;
};

/// Which linear extension orders the search. Both visit the same tables;
/// the alternate order exists to test exactly that.
enum class CellOrder { primary, alternate };

namespace detail {

inline std::vector<ElementId> search_order(const FiniteLattice& L, CellOrder order) {
  if (order == CellOrder::primary) return L.linear_extension();
  std::vector<std::size_t> height(L.size(), 0);
  for (auto y : L.linear_extension())
    for (auto x : L.lower_covers(y)) height[y] = std::max(height[y], height[x] + 1);
  std::vector<ElementId> ext(L.size());
  for (ElementId x = 0; x < L.size(); ++x) ext[x] = x;
  std::sort(ext.begin(), ext.end(), [&](ElementId a, ElementId b) {
    return height[a] != height[b] ? height[a] < height[b] : a > b;
  });
  return ext;
}

class TNormSearch {
 public:
  TNormSearch(const LatticePtr& L, const OracleLimits& limits, CellOrder order,
              const std::function<void(const TNormTable&)>& emit)
      : L_(L), lat_(*L), n_(L->size()), limits_(limits), emit_(emit) {
    cells_.assign(n_ * n_, kUnset);
    const ElementId top = lat_.top(), bot = lat_.bottom();
    for (ElementId x = 0; x < n_; ++x) {
      set(x, top, x);
      set(x, bot, bot);
    }
    const auto ext = search_order(lat_, order);
    for (auto x : ext)
      if (x != top && x != bot) interior_.push_back(x);
    // Unordered interior pairs by (later position, earlier position): every
    // cover-lower neighbour of a cell is decided before the cell itself.
    for (std::size_t j = 0; j < interior_.size(); ++j)
      for (std::size_t i = 0; i <= j; ++i) free_.emplace_back(interior_[i], interior_[j]);
  }

  void run() { descend(0); }

 private:
  static constexpr ElementId kUnset = static_cast<ElementId>(-1);

  ElementId get(ElementId x, ElementId y) const { return cells_[x * n_ + y]; }
  void set(ElementId x, ElementId y, ElementId v) {
    cells_[x * n_ + y] = v;
    cells_[y * n_ + x] = v;
  }

  bool associative_so_far() const {
    for (auto a : interior_)
      for (auto b : interior_) {
        const ElementId ab = get(a, b);
        if (ab == kUnset) continue;
        for (auto c : interior_) {
          const ElementId bc = get(b, c);
          if (bc == kUnset) continue;
          const ElementId left = get(ab, c);
          const ElementId right = get(a, bc);
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    return true;
  }

  void descend(std::size_t k) {
    if (k == free_.size()) {
      if (++count_ > limits_.max_tables)
        throw Error(ErrorKind::BoundExceeded,
                    "more than " + std::to_string(limits_.max_tables) + " t-norms");
      emit_(TNormTable(L_, cells_));
      return;
    }
    const auto [x, y] = free_[k];
    ElementId floor = lat_.bottom();
    for (auto lx : lat_.lower_covers(x)) floor = lat_.join(floor, get(lx, y));
    for (auto ly : lat_.lower_covers(y)) floor = lat_.join(floor, get(x, ly));
    const ElementId ceiling = lat_.meet(x, y);
    for (auto v : lat_.linear_extension()) {
      if (!lat_.leq(floor, v) || !lat_.leq(v, ceiling)) continue;
      set(x, y, v);
      if (associative_so_far()) descend(k + 1);
    }
    set(x, y, kUnset);
  }

  LatticePtr L_;
  const FiniteLattice& lat_;
  std::size_t n_;
  OracleLimits limits_;
  const std::function<void(const TNormTable&)>& emit_;
  std::vector<ElementId> cells_;
  std::vector<ElementId> interior_;
  std::vector<std::pair<ElementId, ElementId>> free_;
  std::size_t count_ = 0;
};

}  // namespace detail

/// Streams every t-norm on L. The search fixes the top row and bottom row,
/// fills the remaining cells of one triangle along a linear extension so
/// monotonicity bounds each cell between the join of its lower neighbours
/// and x ^ y, and prunes on associativity among decided cells.
inline void for_each_tnorm(const LatticePtr& L, const OracleLimits& limits,
                           const std::function<void(const TNormTable&)>& fn,
                           CellOrder order = CellOrder::primary) {
  if (L->size() > limits.max_elements)
    throw Error(ErrorKind::BoundExceeded,
                "exhaustive search is limited to " + std::to_string(limits.max_elements) +
                    " elements; lattice has " + std::to_string(L->size()));
  detail::TNormSearch(L, limits, order, fn).run();
}

/// All t-norms on L, sorted by cell contents.
inline std::vector<TNormTable> enumerate_all_tnorms(const LatticePtr& L,
                                                    const OracleLimits& limits = {},
                                                    CellOrder order = CellOrder::primary) {
  std::vector<TNormTable> out;
  for_each_tnorm(L, limits, [&](const TNormTable& t) { out.push_back(t); }, order);
  std::sort(out.begin(), out.end(),
            [](const TNormTable& a, const TNormTable& b) { return a.cells() < b.cells(); });
  return out;
}

struct CensusCounts {
  std::size_t left_semicontinuous = 0;
  std::size_t left_continuous = 0;
  std::size_t right_continuous = 0;
  std::size_t continuous = 0;
  std::size_t generated = 0;  ///< members of the generated family
};

struct CensusReport {
  std::string lattice_hash;
  std::size_t total = 0;
  CensusCounts counts;
  /// Class name -> first table of that class ({"elements", "table"}) or null.
  nlohmann::json witnesses = nlohmann::json::object();
};

inline CensusReport census(const LatticePtr& L, const OracleLimits& limits = {},
                           std::size_t atom_cap = kDefaultAtomCap) {
  CensusReport r;
  r.lattice_hash = fingerprint(*L);
  std::set<std::vector<ElementId>> family;
  if (is_atomistic(*L))
    for (const auto& g : generated_family(L, atom_cap)) family.insert(g.lifted.cells());
  for (const char* k :
       {"left_semicontinuous", "left_continuous", "right_continuous", "continuous", "generated"})
    r.witnesses[k] = nullptr;
  auto note = [&](const char* cls, std::size_t& counter, const TNormTable& t) {
    if (counter++ == 0) r.witnesses[cls] = table_to_json(t);
  };
  for (const auto& t : enumerate_all_tnorms(L, limits)) {
    ++r.total;
    const bool lc = is_left_continuous(t).ok();
    const bool rc = is_right_continuous(t).ok();
    if (is_left_semicontinuous(t)) note("left_semicontinuous", r.counts.left_semicontinuous, t);
    if (lc) note("left_continuous", r.counts.left_continuous, t);
    if (rc) note("right_continuous", r.counts.right_continuous, t);
    if (lc && rc) note("continuous", r.counts.continuous, t);
    if (family.count(t.cells()) != 0) note("generated", r.counts.generated, t);
  }
  return r;
}

inline nlohmann::json census_to_json(const CensusReport& r) {
  return {{"lattice_hash", r.lattice_hash},
          {"total", r.total},
          {"classes",
           {{"left_semicontinuous", r.counts.left_semicontinuous},
            {"left_continuous", r.counts.left_continuous},
            {"right_continuous", r.counts.right_continuous},
            {"continuous", r.counts.continuous},
            {"generated", r.counts.generated}}},
          {"witnesses", r.witnesses}};
}

inline CensusReport census_from_json(const nlohmann::json& j) {
  try {
    CensusReport r;
    r.lattice_hash = j.at("lattice_hash").get<std::string>();
    r.total = j.at("total").get<std::size_t>();
    const auto& c = j.at("classes");
    r.counts.left_semicontinuous = c.at("left_semicontinuous").get<std::size_t>();
    r.counts.left_continuous = c.at("left_continuous").get<std::size_t>();
    r.counts.right_continuous = c.at("right_continuous").get<std::size_t>();
    r.counts.continuous = c.at("continuous").get<std::size_t>();
    r.counts.generated = c.at("generated").get<std::size_t>();
    r.witnesses = j.at("witnesses");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed census report: ") + e.what());
  }
}

inline constexpr int kCensusCacheVersion = 1;

/// Census through an on-disk cache keyed by the lattice fingerprint. A
/// missing, unreadable or stale entry is recomputed and rewritten.
inline CensusReport cached_census(const LatticePtr& L, const std::filesystem::path& dir,
                                  const OracleLimits& limits = {},
                                  std::size_t atom_cap = kDefaultAtomCap) {
  const auto file = dir / ("census-" + fingerprint(*L) + ".json");
  if (std::ifstream in(file); in) {
    try {
      auto doc = nlohmann::json::parse(in);
      if (doc.value("cache_version", 0) == kCensusCacheVersion)
        return census_from_json(doc.at("report"));
    } catch (const std::exception&) {
    }
  }
  auto r = census(L, limits, atom_cap);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (std::ofstream out(file); out)
    out << nlohmann::json{{"cache_version", kCensusCacheVersion},
                          {"report", census_to_json(r)}}
               .dump(2)
        << "\n";
  return r;
}

/// Brute force against the construction on an atomistic lattice.
struct OracleComparison {
  std::size_t c_brute_count = 0;
  std::size_t c_generated_count = 0;
  bool c_sets_match = false;    ///< t-norms on C(L) are exactly the T_alpha
  bool lifts_verify = false;    ///< every lift passes verify_tnorm
  /// Left-semicontinuous t-norms on L are exactly the lifts whose selection
  /// meets the semicontinuity condition. Absent when L is too large.
  std::optional<bool> lsc_matches_condition;
  /// On Boolean L: left-semicontinuous t-norms are exactly the family.
  std::optional<bool> boolean_lsc_matches_family;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

inline OracleComparison oracle_vs_construction(const LatticePtr& L, const OracleLimits& limits = {},
                                               std::size_t atom_cap = kDefaultAtomCap) {
  OracleComparison r;
  const auto c = c_subposet(L);
  std::set<std::vector<ElementId>> brute_c, constructed_c;
  for (const auto& t : enumerate_all_tnorms(c.lattice, limits)) brute_c.insert(t.cells());
  const auto family = generated_family(c, atom_cap);
  for (const auto& g : family) constructed_c.insert(g.on_c.cells());
  r.c_brute_count = brute_c.size();
  r.c_generated_count = constructed_c.size();
  r.c_sets_match = brute_c == constructed_c;
  if (!r.c_sets_match)
    r.failures.push_back("t-norms on C(L): brute force found " + std::to_string(brute_c.size()) +
                         ", construction gives " + std::to_string(constructed_c.size()));

  r.lifts_verify = true;
  for (const auto& g : family)
    if (auto v = verify_tnorm(g.lifted); !v) {
      r.lifts_verify = false;
      r.failures.push_back("lift of " + g.alpha.describe(*L) + ": " + v.violation->describe(*L));
    }

  if (L->size() <= limits.max_elements) {
    std::set<std::vector<ElementId>> brute_lsc, predicted_lsc, all_lifts;
    for (const auto& t : enumerate_all_tnorms(L, limits))
      if (is_left_semicontinuous(t)) brute_lsc.insert(t.cells());
    for (const auto& g : family) {
      all_lifts.insert(g.lifted.cells());
      if (g.left_semicontinuous.value_or(false)) predicted_lsc.insert(g.lifted.cells());
    }
    r.lsc_matches_condition = brute_lsc == predicted_lsc;
    if (!*r.lsc_matches_condition)
      r.failures.push_back("left-semicontinuous t-norms differ from condition-approved lifts");
    if (is_boolean_atomistic(*L)) {
      r.boolean_lsc_matches_family = brute_lsc == all_lifts;
      if (!*r.boolean_lsc_matches_family)
        r.failures.push_back("on a Boolean lattice the left-semicontinuous set is not the family");
    }
  }
  return r;
}

}  // namespace latnorm

#endif  // LATNORM_ORACLE_HPP
