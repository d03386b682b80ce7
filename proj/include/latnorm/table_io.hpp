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

#ifndef LATNORM_TABLE_IO_HPP
#define LATNORM_TABLE_IO_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "latnorm/error.hpp"
#include "latnorm/tnorm.hpp"

namespace latnorm {

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// RFC 4180 records; a trailing newline does not produce an empty record.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(field);
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(field);
        rows.push_back(row);
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

/// Cayley table as CSV: a header row and a header column of element names
/// in element order, with "T" in the corner.
inline std::string table_to_csv(const TNormTable& t) {
  const auto& L = t.lattice();
  std::string out = "T";
  for (const auto& n : L.names()) out += "," + detail::csv_field(n);
  out += "\n";
  for (ElementId x = 0; x < L.size(); ++x) {
    out += detail::csv_field(L.name(x));
    for (ElementId y = 0; y < L.size(); ++y) out += "," + detail::csv_field(L.name(t(x, y)));
    out += "\n";
  }
  return out;
}

/// Reads a CSV Cayley table for `lattice`. Rows and columns may come in any
/// order but must cover every element exactly once. The result is
/// unchecked; run verify_tnorm on externally supplied tables.
inline TNormTable table_from_csv(const LatticePtr& lattice, std::string_view text) {
  const auto rows = detail::parse_csv(text);
  const std::size_t n = lattice->size();
  if (rows.size() != n + 1)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n + 1) + " CSV rows, got " +
                                           std::to_string(rows.size()));
  auto lookup = [&](const std::string& label, std::size_t line) {
    auto x = lattice->find(label);
    if (!x)
      throw Error(ErrorKind::UnknownLabel,
                  "line " + std::to_string(line) + ": unknown element '" + label + "'", {label});
    return *x;
  };
  if (rows[0].size() != n + 1)
    throw Error(ErrorKind::ParseError, "line 1: header must have " + std::to_string(n + 1) + " fields");
  std::vector<ElementId> columns;
  std::vector<bool> seen_col(n, false), seen_row(n, false);
  for (std::size_t j = 1; j <= n; ++j) {
    const ElementId c = lookup(rows[0][j], 1);
    if (seen_col[c])
      throw Error(ErrorKind::DuplicateLabel, "line 1: column '" + rows[0][j] + "' repeated",
                  {rows[0][j]});
    seen_col[c] = true;
    columns.push_back(c);
  }
  std::vector<ElementId> cells(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& r = rows[i];
    if (r.size() != n + 1)
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(i + 1) + ": expected " + std::to_string(n + 1) + " fields");
    const ElementId x = lookup(r[0], i + 1);
    if (seen_row[x])
      throw Error(ErrorKind::DuplicateLabel,
                  "line " + std::to_string(i + 1) + ": row '" + r[0] + "' repeated", {r[0]});
    seen_row[x] = true;
    for (std::size_t j = 1; j <= n; ++j) cells[x * n + columns[j - 1]] = lookup(r[j], i + 1);
  }
  return TNormTable(lattice, std::move(cells));
}

inline nlohmann::json table_to_json(const TNormTable& t) {
  const auto& L = t.lattice();
  nlohmann::json rows = nlohmann::json::array();
  for (ElementId x = 0; x < L.size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (ElementId y = 0; y < L.size(); ++y) row.push_back(L.name(t(x, y)));
    rows.push_back(std::move(row));
  }
  return {{"elements", L.names()}, {"table", std::move(rows)}};
}

}  // namespace latnorm

#endif  // LATNORM_TABLE_IO_HPP
