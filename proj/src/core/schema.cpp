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

#include "survaudit/core/schema.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace survaudit {

std::string to_string(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kContinuous: return "continuous";
    case ColumnKind::kBinary: return "binary";
    case ColumnKind::kCategorical: return "categorical";
  }
  return "?";
}

std::string to_string(ColumnRole role) {
  switch (role) {
    case ColumnRole::kFeature: return "feature";
    case ColumnRole::kTime: return "time";
    case ColumnRole::kEvent: return "event";
    case ColumnRole::kQuasiIdentifierFeature: return "quasi_identifier_feature";
  }
  return "?";
}

DatasetSchema::DatasetSchema(std::vector<ColumnSpec> columns,
                             std::vector<std::string> quasi_identifiers)
    : columns_(std::move(columns)),
      quasi_identifiers_(std::move(quasi_identifiers)) {
  if (columns_.empty()) throw Error("schema: no columns");

  std::unordered_set<std::string> seen;
  std::size_t n_time = 0, n_event = 0;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    ColumnSpec& c = columns_[i];
    if (!seen.insert(c.name).second)
      throw Error("schema: duplicate column name '" + c.name + "'");
    if (c.kind == ColumnKind::kBinary) {
      if (c.categories.empty()) c.categories = {"0", "1"};
      if (c.categories != std::vector<std::string>{"0", "1"})
        throw Error("schema: binary column '" + c.name +
                    "' must have categories {0,1}");
    }
    if (c.kind == ColumnKind::kCategorical && c.categories.size() < 2)
      throw Error("schema: categorical column '" + c.name +
                  "' needs at least 2 categories");
    if (c.kind == ColumnKind::kContinuous && !c.categories.empty())
      throw Error("schema: continuous column '" + c.name +
                  "' must not declare categories");
    if (c.plausible_min.has_value() != c.plausible_max.has_value())
      throw Error("schema: column '" + c.name +
                  "' declares only one range bound");
    if (c.has_range() && !(*c.plausible_min < *c.plausible_max))
      throw Error("schema: column '" + c.name +
                  "' has plausible_min >= plausible_max");
    if (c.role == ColumnRole::kTime) {
      time_index_ = i;
      ++n_time;
    } else if (c.role == ColumnRole::kEvent) {
      event_index_ = i;
      ++n_event;
    }
  }
  if (n_time != 1 || n_event != 1)
    throw Error("schema: need exactly one time column and one event column");
  if (columns_[event_index_].kind != ColumnKind::kBinary)
    throw Error("schema: event column must be binary");
  if (columns_[time_index_].kind != ColumnKind::kContinuous)
    throw Error("schema: time column must be continuous");

  // Columns carrying the quasi-identifier role are quasi-identifiers even if
  // the explicit list omits them.
  for (const ColumnSpec& c : columns_) {
    if (c.role == ColumnRole::kQuasiIdentifierFeature &&
        std::find(quasi_identifiers_.begin(), quasi_identifiers_.end(),
                  c.name) == quasi_identifiers_.end())
      quasi_identifiers_.push_back(c.name);
  }
  for (const std::string& q : quasi_identifiers_) {
    if (!seen.count(q))
      throw Error("schema: quasi-identifier '" + q + "' is not a column");
  }
}

std::size_t DatasetSchema::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  throw Error("schema: unknown column '" + name + "'");
}

bool DatasetSchema::has_column(const std::string& name) const {
  for (const ColumnSpec& c : columns_)
    if (c.name == name) return true;
  return false;
}

bool DatasetSchema::is_quasi_identifier(const std::string& name) const {
  return std::find(quasi_identifiers_.begin(), quasi_identifiers_.end(),
                   name) != quasi_identifiers_.end();
}

}  // namespace survaudit
