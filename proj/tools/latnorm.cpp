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

// latnorm: command-line front end.
//
//   latnorm info FILE
//   latnorm generate FILE (--alpha LIST | --all) [--extend] [--out DIR]
//   latnorm extend FILE [--out DIR]
//   latnorm restrict FILE (--alpha LIST | --all) [--out DIR]
//   latnorm census FILE [--oracle-cap N]
//   latnorm check FILE
//   latnorm export-dot FILE [--extend]
//
// Exit status: 0 on success, 1 when a requested check fails, 2 on input or
// usage errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latnorm.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::optional<std::string> alpha;
  bool all = false;
  bool extend = false;
  std::optional<std::string> out;
  std::string format;
  std::size_t atom_cap = latnorm::kDefaultAtomCap;
  std::size_t oracle_cap = latnorm::OracleLimits{}.max_elements;
  int verbosity = 0;
};

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadInput = 2;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path.string());
  out << content;
}

/// Either writes to DIR/name or prints to stdout.
void emit(const RunConfig& cfg, const std::string& name, const std::string& content) {
  if (cfg.out)
    write_file(fs::path(*cfg.out) / name, content);
  else
    std::cout << content;
}

std::string labels_line(const latnorm::FiniteLattice& L, const latnorm::ElementSet& s) {
  std::string out;
  for (auto x : s.members()) out += (out.empty() ? "" : " ") + L.name(x);
  return out.empty() ? "-" : out;
}

json labels_json(const latnorm::FiniteLattice& L, const latnorm::ElementSet& s) {
  return L.labels(s);
}

std::string table_text(const RunConfig& cfg, const latnorm::TNormTable& t) {
  return cfg.format == "json" ? latnorm::table_to_json(t).dump(2) + "\n" : latnorm::table_to_csv(t);
}

std::string table_ext(const RunConfig& cfg) { return cfg.format == "json" ? ".json" : ".csv"; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
  throw UsageError("--format " + cfg.format + " is not valid for " + cfg.command + " (use " + list + ")");
}

void require_selection(const RunConfig& cfg) {
  if (cfg.all == cfg.alpha.has_value())
    throw UsageError(cfg.command + " needs exactly one of --alpha or --all");
}

int cmd_info(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"json"});
  const auto L = latnorm::load_lattice(cfg.input);
  const auto A = latnorm::atoms(*L);
  const auto J = latnorm::join_irreducibles(*L);
  const auto H = latnorm::non_atomic_join_irreducibles(*L);
  const auto len = latnorm::length(*L);
  const bool atomistic = latnorm::is_atomistic(*L);
  const bool boolean = latnorm::is_boolean_atomistic(*L);
  if (cfg.format == "json") {
    json covers = json::array();
    for (const auto& [lo, hi] : L->cover_pairs()) covers.push_back({L->name(lo), L->name(hi)});
    json doc = {{"elements", L->names()},
                {"covers", covers},
                {"length", len},
                {"atoms", labels_json(*L, A)},
                {"join_irreducibles", labels_json(*L, J)},
                {"hidden", labels_json(*L, H)},
                {"atomistic", atomistic},
                {"boolean", boolean},
                {"fingerprint", latnorm::fingerprint(*L)}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::string covers;
  for (const auto& [lo, hi] : L->cover_pairs())
    covers += (covers.empty() ? "" : " ") + L->name(lo) + "<" + L->name(hi);
  std::string elements;
  for (const auto& n : L->names()) elements += (elements.empty() ? "" : " ") + n;
  std::cout << "elements: " << elements << "\n"
            << "covers: " << (covers.empty() ? "-" : covers) << "\n"
            << "length: " << len << "\n"
            << "atoms: " << labels_line(*L, A) << "\n"
            << "join-irreducibles: " << labels_line(*L, J) << "\n"
            << "non-atomic join-irreducibles: " << labels_line(*L, H) << "\n"
            << "atomistic: " << (atomistic ? "true" : "false") << "\n"
            << "boolean: " << (boolean ? "true" : "false") << "\n"
            << "fingerprint: " << latnorm::fingerprint(*L) << "\n";
  if (len <= 1) std::cout << "note: length <= 1, the meet is the only t-norm\n";
  return 0;
}

int cmd_generate(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"csv", "json"});
  require_selection(cfg);
  auto L = latnorm::load_lattice(cfg.input);
  if (cfg.extend) L = latnorm::extend(L).extended;
  if (!latnorm::is_atomistic(*L))
    throw latnorm::Error(latnorm::ErrorKind::NotAtomistic,
                         "lattice is not atomistic (hint: pass --extend to work on its atomistic extension)");
  const auto c = latnorm::c_subposet(L);
  std::vector<latnorm::GeneratedTNorm> members;
  if (cfg.all) {
    members = latnorm::generated_family(L, cfg.atom_cap);
  } else {
    members.push_back(latnorm::generate(c, latnorm::AtomSelection::parse(*L, *cfg.alpha)));
  }
  if (!cfg.out) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (cfg.all) std::cout << (i == 0 ? "" : "\n") << "# " << members[i].alpha.file_stem(*L) << "\n";
      std::cout << table_text(cfg, members[i].on_c) << "\n" << table_text(cfg, members[i].lifted);
    }
    return 0;
  }
  json index = {{"lattice_hash", latnorm::fingerprint(*L)},
                {"elements", L->names()},
                {"c_elements", c.lattice->names()},
                {"members", json::array()}};
  for (const auto& g : members) {
    const auto stem = g.alpha.file_stem(*L);
    emit(cfg, "c/" + stem + table_ext(cfg), table_text(cfg, g.on_c));
    emit(cfg, stem + table_ext(cfg), table_text(cfg, g.lifted));
    index["members"].push_back({{"alpha", g.alpha.sorted_labels(*L)},
                                {"c_file", "c/" + stem + table_ext(cfg)},
                                {"file", stem + table_ext(cfg)},
                                {"left_semicontinuous", g.left_semicontinuous.value_or(false)}});
  }
  emit(cfg, "index.json", index.dump(2) + "\n");
  return 0;
}

int cmd_extend(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"json"});
  const auto ext = latnorm::extend(latnorm::load_lattice(cfg.input));
  if (!cfg.out) {
    std::cout << latnorm::lattice_to_json(*ext.extended);
    return 0;
  }
  const auto stem = fs::path(cfg.input).stem().string();
  emit(cfg, stem + "_ext.json", latnorm::lattice_to_json(*ext.extended));
  emit(cfg, stem + "_ext.map.json", ext.sidecar().dump(2) + "\n");
  return 0;
}

std::string condition_line(const latnorm::ExtendedLattice& ext, const latnorm::SMember& m) {
  const auto& X = *ext.extended;
  if (m.condition.ok()) return "condition (C): pass for " + m.alpha.describe(X);
  const auto& w = m.condition.violation->witness;
  return "condition (C): fail for " + m.alpha.describe(X) + ": " + X.name(w[1]) +
         " is selected but no other atom below " + X.name(w[0]) + " is";
}

int cmd_restrict(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"csv", "json"});
  require_selection(cfg);
  const auto ext = latnorm::extend(latnorm::load_lattice(cfg.input));
  const auto& X = *ext.extended;
  const auto c = latnorm::c_subposet(ext.extended);
  if (cfg.alpha) {
    const auto alpha = latnorm::AtomSelection::parse(X, *cfg.alpha);
    const latnorm::SMember m{alpha, latnorm::condition_c(ext, alpha), std::nullopt, std::nullopt};
    std::cerr << condition_line(ext, m) << "\n";
    // Fails with ConditionCViolated and the offending pair when the gate is closed.
    const auto restricted = latnorm::restrict_to_original(ext, latnorm::generate(c, alpha));
    if (!m.condition.ok())
      throw latnorm::Error(latnorm::ErrorKind::Internal, "restriction closed although condition fails");
    emit(cfg, alpha.file_stem(X) + table_ext(cfg), table_text(cfg, restricted));
    return 0;
  }
  const auto fam = latnorm::s_family(ext, cfg.atom_cap);
  json index = {{"lattice_hash", latnorm::fingerprint(*ext.original)},
                {"elements", ext.original->names()},
                {"extended_elements", X.names()},
                {"members", json::array()}};
  for (const auto& m : fam.members) {
    json entry = {{"alpha", m.alpha.sorted_labels(X)},
                  {"condition_c", m.condition.ok() ? "pass" : "fail"}};
    if (m.restricted) {
      if (cfg.out) {
        const auto name = m.alpha.file_stem(X) + table_ext(cfg);
        entry["file"] = name;
        emit(cfg, name, table_text(cfg, *m.restricted));
      } else {
        entry["table"] = latnorm::table_to_json(*m.restricted)["table"];
      }
    } else {
      entry["witness"] = m.condition.violation->witness_labels(X);
    }
    index["members"].push_back(std::move(entry));
  }
  index["distinct"] = fam.distinct.size();
  emit(cfg, "index.json", index.dump(2) + "\n");
  return 0;
}

int cmd_census(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"json"});
  const auto L = latnorm::load_lattice(cfg.input);
  latnorm::OracleLimits limits;
  limits.max_elements = cfg.oracle_cap;
  if (L->size() > limits.max_elements)
    throw latnorm::Error(latnorm::ErrorKind::BoundExceeded,
                         "lattice has " + std::to_string(L->size()) +
                             " elements; exhaustive search is capped at " +
                             std::to_string(limits.max_elements) + " (raise with --oracle-cap)");
  latnorm::CensusReport r;
  if (const char* dir = std::getenv("LATNORM_CACHE_DIR"); dir != nullptr && *dir != '\0')
    r = latnorm::cached_census(L, dir, limits, cfg.atom_cap);
  else
    r = latnorm::census(L, limits, cfg.atom_cap);
  const std::string text = latnorm::census_to_json(r).dump(2) + "\n";
  if (cfg.out)
    write_file(*cfg.out, text);
  else
    std::cout << text;
  return 0;
}

int cmd_check(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"json"});
  const auto L = latnorm::load_lattice(cfg.input);
  latnorm::SuiteOptions opt;
  opt.oracle.max_elements = cfg.oracle_cap;
  opt.atom_cap = std::min(opt.atom_cap, cfg.atom_cap);
  const auto rep = latnorm::run_suite(L, opt);
  if (cfg.format == "json") {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    for (const auto& r : rep.results) {
      std::string tag = r.status == latnorm::CheckStatus::pass   ? "PASS"
                        : r.status == latnorm::CheckStatus::fail ? "FAIL"
                                                                 : "SKIP";
      std::cout << tag << " " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  if (cfg.out) write_file(*cfg.out, rep.to_json().dump(2) + "\n");
  return rep.ok() ? 0 : kExitFailedCheck;
}

int cmd_export_dot(const RunConfig& cfg) {
  if (!cfg.format.empty()) require_format(cfg, {"dot"});
  auto L = latnorm::load_lattice(cfg.input);
  if (cfg.extend) L = latnorm::extend(L).extended;
  const std::string text = latnorm::lattice_to_dot(*L);
  if (cfg.out)
    write_file(*cfg.out, text);
  else
    std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular norms on finite lattices"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "Lattice JSON file")->required()->check(CLI::ExistingFile);
    sub->add_flag("-v,--verbose", cfg.verbosity, "Extra diagnostics on stderr");
  };
  // No default_val: it would write the shared field for every subcommand.
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv (default) or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--atom-cap", cfg.atom_cap, "Largest atom count to enumerate selections over")
        ->check(CLI::PositiveNumber);
    sub->add_option("--oracle-cap", cfg.oracle_cap, "Largest lattice for exhaustive search")
        ->check(CLI::PositiveNumber);
  };

  auto* info = app.add_subcommand("info", "Order-theoretic summary of a lattice");
  add_common(info);
  info->add_option("--format", cfg.format, "text (default) or json")->check(CLI::IsMember({"json"}));

  auto* gen = app.add_subcommand("generate", "T_alpha on C(L) and its lift to L");
  add_common(gen);
  gen->add_option("--alpha", cfg.alpha, "Comma-separated atoms; empty selects none");
  gen->add_flag("--all", cfg.all, "Every selection");
  gen->add_flag("--extend", cfg.extend, "Work on the atomistic extension");
  gen->add_option("--out", cfg.out, "Output directory");
  add_format(gen);
  add_caps(gen);

  auto* ext = app.add_subcommand("extend", "Atomistic extension of a lattice");
  add_common(ext);
  ext->add_option("--out", cfg.out, "Output directory");

  auto* res = app.add_subcommand("restrict", "Lift on the extension restricted back to L");
  add_common(res);
  res->add_option("--alpha", cfg.alpha, "Comma-separated atoms of the extension");
  res->add_flag("--all", cfg.all, "Every selection, with an index of condition verdicts");
  res->add_option("--out", cfg.out, "Output directory");
  add_format(res);
  add_caps(res);

  auto* cen = app.add_subcommand("census", "Exhaustive classification of all t-norms");
  add_common(cen);
  cen->add_option("--out", cfg.out, "Output file");
  add_caps(cen);

  auto* chk = app.add_subcommand("check", "Run every cross-check on a lattice");
  add_common(chk);
  chk->add_option("--out", cfg.out, "Also write the JSON report here");
  chk->add_option("--format", cfg.format, "text (default) or json")->check(CLI::IsMember({"json"}));
  add_caps(chk);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  add_common(dot);
  dot->add_flag("--extend", cfg.extend, "Draw the atomistic extension");
  dot->add_option("--out", cfg.out, "Output file");
  dot->add_option("--format", cfg.format, "dot")->check(CLI::IsMember({"dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (info->parsed()) return cfg.command = "info", cmd_info(cfg);
    if (gen->parsed()) return cfg.command = "generate", cmd_generate(cfg);
    if (ext->parsed()) return cfg.command = "extend", cmd_extend(cfg);
    if (res->parsed()) return cfg.command = "restrict", cmd_restrict(cfg);
    if (cen->parsed()) return cfg.command = "census", cmd_census(cfg);
    if (chk->parsed()) return cfg.command = "check", cmd_check(cfg);
    if (dot->parsed()) return cfg.command = "export-dot", cmd_export_dot(cfg);
  } catch (const latnorm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (cfg.verbosity > 0 && !e.witness().empty()) {
      std::cerr << "witness:";
      for (const auto& w : e.witness()) std::cerr << " " << w;
      std::cerr << "\n";
    }
    return e.kind() == latnorm::ErrorKind::ConditionCViolated ? kExitFailedCheck : kExitBadInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
