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

// Cross-checks run by `latnorm check`: every property the construction
// promises, evaluated on one lattice and reported with witnesses.

#ifndef LATNORM_SUITE_HPP
#define LATNORM_SUITE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "latnorm/atomic.hpp"
#include "latnorm/extension.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/oracle.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

enum class CheckStatus { pass, fail, skip };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  ///< witness on failure, reason on skip
};

struct SuiteReport {
  std::string lattice_hash;
  std::vector<CheckResult> results;

  bool ok() const {
    for (const auto& r : results)
      if (r.status == CheckStatus::fail) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results)
      checks.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
    return {{"lattice_hash", lattice_hash}, {"ok", ok()}, {"checks", std::move(checks)}};
  }
};

struct SuiteOptions {
  std::size_t atom_cap = 12;             ///< per-selection checks
  std::size_t pair_atom_cap = 8;         ///< checks over pairs of selections
  std::size_t isomorphism_atom_cap = kDefaultIsomorphismAtomCap;
  OracleLimits oracle;
};

/// Problems with an extension: atomicity, new atoms sitting right above 0
/// and right below p, embedding preserving covers, meets and joins.
inline std::vector<std::string> extension_defects(const ExtendedLattice& ext) {
  std::vector<std::string> out;
  const auto& L = *ext.original;
  const auto& X = *ext.extended;
  if (!is_atomistic(X)) out.push_back("extension is not atomistic");
  if (ext.embed[L.bottom()] != X.bottom() || ext.embed[L.top()] != X.top())
    out.push_back("embedding moves a bound");
  for (const auto& [lo, hi] : L.cover_pairs())
    if (!X.covers(ext.embed[lo], ext.embed[hi]))
      out.push_back("cover " + L.name(lo) + " < " + L.name(hi) + " is not a cover after extension");
  for (ElementId x = 0; x < L.size(); ++x)
    for (ElementId y = 0; y < L.size(); ++y) {
      if (X.meet(ext.embed[x], ext.embed[y]) != ext.embed[L.meet(x, y)])
        out.push_back("meet of " + L.name(x) + ", " + L.name(y) + " not preserved");
      if (X.join(ext.embed[x], ext.embed[y]) != ext.embed[L.join(x, y)])
        out.push_back("join of " + L.name(x) + ", " + L.name(y) + " not preserved");
    }
  ElementSet expected = X.empty_set();
  for (auto a : atoms(L).members()) expected.insert(ext.embed[a]);
  for (const auto& [p, w] : ext.new_atoms) {
    expected.insert(w);
    if (!X.covers(X.bottom(), w) || !X.covers(w, ext.embed[p]))
      out.push_back(X.name(w) + " does not sit between 0 and " + L.name(p));
  }
  if (!(atoms(X) == expected)) out.push_back("atoms of the extension are not the expected set");
  if (ext.new_atoms.size() != non_atomic_join_irreducibles(L).size())
    out.push_back("wrong number of new atoms");
  return out;
}

namespace detail {

inline CheckResult from_failures(std::string name, const std::vector<std::string>& failures) {
  CheckResult r{std::move(name), CheckStatus::pass, ""};
  if (!failures.empty()) {
    r.status = CheckStatus::fail;
    r.detail = failures.front();
    if (failures.size() > 1) r.detail += " (+" + std::to_string(failures.size() - 1) + " more)";
  }
  return r;
}

inline CheckResult skipped(std::string name, std::string why) {
  return {std::move(name), CheckStatus::skip, std::move(why)};
}

/// Checks on the generated family of an atomistic lattice.
inline void atomistic_checks(const LatticePtr& L, const SuiteOptions& opt, SuiteReport& rep) {
  const auto c = c_subposet(L);
  const std::size_t k = atoms(*L).size();
  if (c.degenerate) {
    rep.results.push_back(skipped("family", "length <= 1: the only t-norm is the meet"));
    return;
  }
  if (k > opt.atom_cap) {
    rep.results.push_back(skipped("family", std::to_string(k) + " atoms exceed the cap"));
    return;
  }
  std::vector<std::string> round_trip, sound, iff;
  for (const auto& g : generated_family(c, opt.atom_cap)) {
    const auto name = g.alpha.describe(*L);
    if (!(restrict_onto(g.lifted, c.to_parent, c.lattice) == g.on_c))
      round_trip.push_back(name + ": lift does not restrict back to T_alpha");
    if (auto v = verify_tnorm(g.lifted); !v) sound.push_back(name + ": " + v.violation->describe(*L));
    const bool predicted = semicontinuity_condition(*L, g.alpha).ok();
    const auto observed = is_left_semicontinuous(g.lifted);
    if (predicted != observed.ok())
      iff.push_back(name + ": condition says " + (predicted ? "yes" : "no") +
                    ", direct check says " + (observed.ok() ? "yes" : observed.violation->describe(*L)));
  }
  rep.results.push_back(from_failures("round_trip", round_trip));
  rep.results.push_back(from_failures("lift_soundness", sound));
  rep.results.push_back(from_failures("semicontinuity_iff", iff));

  if (k > opt.isomorphism_atom_cap) {
    rep.results.push_back(skipped("isomorphism", std::to_string(k) + " atoms exceed the cap"));
  } else {
    rep.results.push_back(from_failures("isomorphism", poset_isomorphism_check(L, k).failures));
  }

  if (L->size() > opt.oracle.max_elements || k + 2 > opt.oracle.max_elements) {
    rep.results.push_back(skipped("oracle", "lattice exceeds the exhaustive-search cap"));
  } else {
    rep.results.push_back(from_failures("oracle", oracle_vs_construction(L, opt.oracle, k).failures));
  }
}

/// Checks on the extension of any lattice with at least two elements.
inline void extension_checks(const LatticePtr& L, const SuiteOptions& opt, SuiteReport& rep) {
  const auto ext = extend(L);
  rep.results.push_back(from_failures("extension", extension_defects(ext)));
  const auto& X = *ext.extended;
  const std::size_t k = atoms(X).size();
  const auto c = c_subposet(ext.extended);
  if (c.degenerate || k > opt.atom_cap) {
    rep.results.push_back(skipped("condition_c_iff", c.degenerate ? "extension has length <= 1"
                                                                  : "too many atoms"));
    return;
  }

  std::vector<std::string> gate;
  std::vector<std::string> continuity;
  const auto fam = s_family(ext, opt.atom_cap);
  std::vector<std::size_t> local(X.size(), L->size());
  for (ElementId x = 0; x < L->size(); ++x) local[ext.embed[x]] = x;
  for (const auto& m : fam.members) {
    const auto g = generate(c, m.alpha);
    bool closed = true;
    for (auto x : ext.embed)
      for (auto y : ext.embed)
        if (local[g.lifted(x, y)] == L->size()) closed = false;
    bool is_tnorm = false;
    if (closed) is_tnorm = verify_tnorm(restrict_onto(g.lifted, ext.embed, ext.original)).ok();
    if (m.condition.ok() != (closed && is_tnorm))
      gate.push_back(m.alpha.describe(X) + ": condition " + (m.condition.ok() ? "holds" : "fails") +
                     " but restriction " + (closed && is_tnorm ? "is" : "is not") + " a t-norm");
    if (m.restricted && m.lifted_left_semicontinuous) {
      const auto rc = continuity_of_restriction(ext, *m.restricted, *m.lifted_left_semicontinuous);
      if (!rc.consistent())
        continuity.push_back(m.alpha.describe(X) + ": restriction lacks an implied continuity property");
    }
  }
  rep.results.push_back(from_failures("condition_c_iff", gate));
  rep.results.push_back(from_failures("restriction_continuity", continuity));

  if (const auto w1_id = ext.new_atom_of(L->top())) {
    const auto w1 = *w1_id;
    std::vector<std::string> redundant;
    for (const auto& m : fam.members) {
      if (!m.restricted || m.alpha.contains(w1)) continue;
      auto with = m.alpha.atoms();
      with.insert(w1);
      const auto& other = fam.members[*fam.find(AtomSelection(X, with))];
      if (!other.restricted || !(*other.restricted == *m.restricted))
        redundant.push_back("adding " + X.name(w1) + " to " + m.alpha.describe(X) +
                            " changes the restriction");
    }
    rep.results.push_back(from_failures("top_atom_redundancy", redundant));
  }

  if (k > opt.pair_atom_cap) {
    rep.results.push_back(skipped("s_joins", "too many atoms for the pairwise check"));
    return;
  }
  // Order among distinct restrictions, then each union checked as the least
  // upper bound.
  const auto& d = fam.distinct;
  std::vector<std::size_t> class_of(fam.members.size(), d.size());
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    if (!fam.members[i].restricted) continue;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (*fam.members[d[j]].restricted == *fam.members[i].restricted) class_of[i] = j;
  }
  std::vector<std::vector<bool>> le(d.size(), std::vector<bool>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      le[i][j] = tnorm_le(*fam.members[d[i]].restricted, *fam.members[d[j]].restricted);
  std::vector<std::string> joins;
  for (std::size_t i = 0; i < fam.members.size() && joins.size() < 4; ++i) {
    if (!fam.members[i].restricted) continue;
    for (std::size_t j = i; j < fam.members.size(); ++j) {
      if (!fam.members[j].restricted) continue;
      const auto u = s_family_join(ext, fam.members[i].alpha, fam.members[j].alpha);
      const std::size_t cu = class_of[*fam.find(u)];
      const std::size_t ci = class_of[i], cj = class_of[j];
      bool least = le[ci][cu] && le[cj][cu];
      for (std::size_t v = 0; v < d.size() && least; ++v)
        if (le[ci][v] && le[cj][v] && !le[cu][v]) least = false;
      if (!least) {
        joins.push_back("union of " + fam.members[i].alpha.describe(X) + " and " +
                        fam.members[j].alpha.describe(X) + " is not the least upper bound");
        break;
      }
    }
  }
  rep.results.push_back(from_failures("s_joins", joins));
}

}  // namespace detail

inline SuiteReport run_suite(const LatticePtr& L, const SuiteOptions& opt = {}) {
  SuiteReport rep;
  rep.lattice_hash = fingerprint(*L);
  if (is_atomistic(*L)) {
    detail::atomistic_checks(L, opt, rep);
  } else {
    rep.results.push_back(detail::skipped("family", "lattice is not atomistic; see the extension checks"));
  }
  if (L->size() >= 2) {
    detail::extension_checks(L, opt, rep);
  } else {
    rep.results.push_back(detail::skipped("extension", "one-element lattice"));
  }
  return rep;
}

}  // namespace latnorm

#endif  // LATNORM_SUITE_HPP
