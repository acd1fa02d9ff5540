// Copyright 2026 The survaudit Authors
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

#include "survaudit/ingest/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace survaudit::ingest {

namespace {

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& msg) {
  throw Error(source + ":" + std::to_string(line) + ": " + msg);
}

// One record, honoring double quotes. Returns false at end of input.
bool read_record(std::istream& in, char delimiter,
                 std::vector<std::string>& fields, std::size_t& lineno) {
  fields.clear();
  std::string line;
  if (!std::getline(in, line)) return false;
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == delimiter) {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted)
    throw Error("line " + std::to_string(lineno) +
                ": unterminated quoted field");
  fields.push_back(field);
  return true;
}

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string format_value(const ColumnSpec& spec, double v) {
  if (spec.is_categorical_like()) {
    auto code = static_cast<std::size_t>(v);
    return spec.categories.at(code);
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string quote_if_needed(const std::string& s, char delimiter) {
  if (s.find(delimiter) == std::string::npos &&
      s.find('"') == std::string::npos && s.find('\n') == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

DataTable parse_table(const std::string& text, SchemaPtr schema,
                      char delimiter, const std::string& source_name) {
  if (!schema) throw Error("parse_table: null schema");
  std::istringstream in(text);
  std::size_t lineno = 0;
  std::vector<std::string> fields;

  if (!read_record(in, delimiter, fields, lineno))
    fail(source_name, 1, "empty file");

  // Map file columns to schema indices.
  std::vector<std::size_t> col_of_field(fields.size());
  std::vector<bool> seen(schema->n_columns(), false);
  for (std::size_t f = 0; f < fields.size(); ++f) {
    if (!schema->has_column(fields[f]))
      fail(source_name, lineno, "unknown column '" + fields[f] + "'");
    std::size_t c = schema->index_of(fields[f]);
    if (seen[c])
      fail(source_name, lineno, "column '" + fields[f] + "' appears twice");
    seen[c] = true;
    col_of_field[f] = c;
  }
  for (std::size_t c = 0; c < schema->n_columns(); ++c)
    if (!seen[c])
      fail(source_name, lineno,
           "header lacks schema column '" + schema->column(c).name + "'");

  std::vector<std::vector<double>> values(schema->n_columns());
  std::vector<std::vector<std::uint8_t>> missing(schema->n_columns());
  std::size_t n_fields = fields.size();

  while (read_record(in, delimiter, fields, lineno)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != n_fields)
      fail(source_name, lineno,
           "expected " + std::to_string(n_fields) + " fields, got " +
               std::to_string(fields.size()));
    for (std::size_t f = 0; f < n_fields; ++f) {
      std::size_t c = col_of_field[f];
      const ColumnSpec& spec = schema->column(c);
      const std::string& cell = fields[f];
      if (cell.empty()) {
        values[c].push_back(0.0);
        missing[c].push_back(1);
        continue;
      }
      double v = 0.0;
      if (spec.is_continuous()) {
        if (!parse_double(cell, v))
          fail(source_name, lineno,
               "column '" + spec.name + "': unparseable number '" + cell +
                   "'");
      } else {
        auto it = std::find(spec.categories.begin(), spec.categories.end(),
                            cell);
        if (it != spec.categories.end()) {
          v = static_cast<double>(it - spec.categories.begin());
        } else {
          double num;
          double integral;
          if (parse_double(cell, num) && std::modf(num, &integral) == 0.0 &&
              num >= 0.0 &&
              num < static_cast<double>(spec.n_categories())) {
            v = num;
          } else {
            fail(source_name, lineno,
                 "column '" + spec.name + "': unknown category label '" +
                     cell + "'");
          }
        }
      }
      values[c].push_back(v);
      missing[c].push_back(0);
    }
  }
  return DataTable(std::move(schema), std::move(values), std::move(missing));
}

DataTable load_table(const std::string& path, SchemaPtr schema,
                     char delimiter) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open table file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), std::move(schema), delimiter, path);
}

std::string format_table(const DataTable& table, char delimiter) {
  std::string out;
  const DatasetSchema& schema = table.schema();
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    if (c) out += delimiter;
    out += quote_if_needed(schema.column(c).name, delimiter);
  }
  out += '\n';
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    for (std::size_t c = 0; c < schema.n_columns(); ++c) {
      if (c) out += delimiter;
      if (!table.is_missing(c, r))
        out += quote_if_needed(format_value(schema.column(c), table.value(c, r)),
                               delimiter);
    }
    out += '\n';
  }
  return out;
}

void write_table(const std::string& path, const DataTable& table,
                 char delimiter) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write table file '" + path + "'");
  out << format_table(table, delimiter);
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace survaudit::ingest
