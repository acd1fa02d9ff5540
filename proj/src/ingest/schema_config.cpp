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

#include "survaudit/ingest/schema_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace survaudit::ingest {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& msg) {
  throw Error(source + ":" + std::to_string(line) + ": " + msg);
}

struct RawColumn {
  std::string name;
  std::size_t line = 0;
  ColumnSpec spec;
  bool kind_set = false;
};

}  // namespace

SchemaPtr parse_schema_config(const std::string& text,
                              const std::string& source_name) {
  std::vector<RawColumn> columns;
  std::string time_name, event_name;
  std::vector<std::string> quasi_identifiers;
  enum class Section { kNone, kDataset, kColumn } section = Section::kNone;
  RawColumn* current = nullptr;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(source_name, lineno, "unterminated section");
      std::string header = trim(line.substr(1, line.size() - 2));
      if (header == "dataset") {
        section = Section::kDataset;
        current = nullptr;
      } else if (header.rfind("column ", 0) == 0) {
        std::string name = trim(header.substr(7));
        if (name.empty()) fail(source_name, lineno, "empty column name");
        for (const RawColumn& c : columns)
          if (c.name == name)
            fail(source_name, lineno, "duplicate column '" + name + "'");
        columns.push_back({name, lineno, ColumnSpec{}, false});
        columns.back().spec.name = name;
        section = Section::kColumn;
        current = &columns.back();
      } else {
        fail(source_name, lineno, "unknown section '" + header + "'");
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(source_name, lineno, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    if (section == Section::kDataset) {
      if (key == "time")
        time_name = value;
      else if (key == "event")
        event_name = value;
      else if (key == "quasi_identifiers")
        quasi_identifiers = split_list(value);
      else
        fail(source_name, lineno, "unknown dataset key '" + key + "'");
    } else if (section == Section::kColumn) {
      ColumnSpec& spec = current->spec;
      if (key == "kind") {
        if (value == "continuous")
          spec.kind = ColumnKind::kContinuous;
        else if (value == "binary")
          spec.kind = ColumnKind::kBinary;
        else if (value == "categorical")
          spec.kind = ColumnKind::kCategorical;
        else
          fail(source_name, lineno, "unknown kind '" + value + "'");
        current->kind_set = true;
      } else if (key == "unit") {
        spec.unit = value;
      } else if (key == "range") {
        std::istringstream rs(value);
        double lo, hi;
        if (!(rs >> lo >> hi))
          fail(source_name, lineno, "range needs two numbers");
        spec.plausible_min = lo;
        spec.plausible_max = hi;
      } else if (key == "categories") {
        spec.categories = split_list(value);
      } else if (key == "missingness") {
        if (value == "allowed")
          spec.missingness_allowed = true;
        else if (value == "forbidden")
          spec.missingness_allowed = false;
        else
          fail(source_name, lineno, "missingness must be allowed|forbidden");
      } else {
        fail(source_name, lineno, "unknown column key '" + key + "'");
      }
    } else {
      fail(source_name, lineno, "key outside any section");
    }
  }

  if (columns.empty()) fail(source_name, lineno, "no columns declared");
  if (time_name.empty() || event_name.empty())
    fail(source_name, lineno, "[dataset] must name time and event columns");

  std::vector<ColumnSpec> specs;
  specs.reserve(columns.size());
  for (RawColumn& c : columns) {
    if (!c.kind_set)
      fail(source_name, c.line, "column '" + c.name + "' missing kind");
    if (c.name == time_name)
      c.spec.role = ColumnRole::kTime;
    else if (c.name == event_name)
      c.spec.role = ColumnRole::kEvent;
    else if (std::find(quasi_identifiers.begin(), quasi_identifiers.end(),
                       c.name) != quasi_identifiers.end())
      c.spec.role = ColumnRole::kQuasiIdentifierFeature;
    specs.push_back(std::move(c.spec));
  }

  try {
    return std::make_shared<DatasetSchema>(std::move(specs),
                                           std::move(quasi_identifiers));
  } catch (const Error& e) {
    throw Error(source_name + ": " + e.what());
  }
}

SchemaPtr load_schema_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open schema file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_schema_config(buf.str(), path);
}

}  // namespace survaudit::ingest
