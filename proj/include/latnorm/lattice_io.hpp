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

#ifndef LATNORM_LATTICE_IO_HPP
#define LATNORM_LATTICE_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latnorm/error.hpp"
#include "latnorm/lattice.hpp"

namespace latnorm {

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

/// Line of the first quoted occurrence of `label`, or 0 when absent.
inline std::size_t line_of_label(std::string_view text, const std::string& label) {
  const std::string quoted = nlohmann::json(label).dump();
  auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
}

inline std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

/// Parses `{"elements": [...], "covers": [[lo, hi], ...]}`. Errors name the
/// line where the offending label first appears.
inline LatticePtr lattice_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(detail::line_of_offset(text, e.byte)) + ": " +
                    e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw Error(ErrorKind::ParseError, "expected an object with an \"elements\" array");
  std::vector<std::string> names;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(ErrorKind::ParseError, "element labels must be strings");
    names.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array())
      throw Error(ErrorKind::ParseError, "\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw Error(ErrorKind::ParseError,
                    "each cover must be a pair of labels, got " + c.dump());
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  try {
    return lattice_from_covers(names, covers);
  } catch (const Error& e) {
    if (e.witness().empty()) throw;
    const std::size_t line = detail::line_of_label(text, e.witness().front());
    if (line == 0) throw;
    throw Error(e.kind(), "line " + std::to_string(line) + ": " +
                              std::string(e.what()).substr(to_string(e.kind()).size() + 2),
                e.witness());
  }
}

inline LatticePtr load_lattice(const std::string& path) {
  return lattice_from_json(detail::read_file(path));
}

inline std::string lattice_to_json(const FiniteLattice& L) {
  std::string out = "{\n  \"elements\": [";
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (i != 0) out += ", ";
    out += detail::quote(L.name(static_cast<ElementId>(i)));
  }
  out += "],\n  \"covers\": [";
  bool first = true;
  for (const auto& [lo, hi] : L.cover_pairs()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + detail::quote(L.name(lo)) + ", " + detail::quote(L.name(hi)) + "]";
  }
  out += "]\n}\n";
  return out;
}

/// Hasse diagram in DOT: one node per element, one edge per cover, drawn
/// bottom to top.
inline std::string lattice_to_dot(const FiniteLattice& L, std::string_view graph_name = "lattice") {
  std::string out = "digraph " + std::string(graph_name) + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < L.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" +
           detail::quote(L.name(static_cast<ElementId>(i))) + "];\n";
  for (const auto& [lo, hi] : L.cover_pairs())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace latnorm

#endif  // LATNORM_LATTICE_IO_HPP
