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

#ifndef SURVAUDIT_CORE_SCHEMA_HPP
#define SURVAUDIT_CORE_SCHEMA_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace survaudit {

/// Base error type for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class ColumnKind { kContinuous, kBinary, kCategorical };

enum class ColumnRole { kFeature, kTime, kEvent, kQuasiIdentifierFeature };

std::string to_string(ColumnKind kind);
std::string to_string(ColumnRole role);

/// Typed metadata for one column: kind, role, plausible range, categories.
struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::kContinuous;
  ColumnRole role = ColumnRole::kFeature;
  std::string unit;
  // Only meaningful for continuous columns.
  std::optional<double> plausible_min;
  std::optional<double> plausible_max;
  // Ordered label list; binary columns always carry {"0","1"}.
  std::vector<std::string> categories;
  bool missingness_allowed = true;

  bool is_continuous() const { return kind == ColumnKind::kContinuous; }
  bool is_categorical_like() const { return kind != ColumnKind::kContinuous; }
  bool has_range() const { return plausible_min && plausible_max; }
  std::size_t n_categories() const { return categories.size(); }
  bool is_outcome() const {
    return role == ColumnRole::kTime || role == ColumnRole::kEvent;
  }
};

/// Ordered column inventory plus the quasi-identifier subset.
///
/// Invariants (enforced by the constructor): unique column names, exactly one
/// time column and one event column, quasi-identifiers are existing columns,
/// binary columns have categories {0,1} and continuous ranges satisfy
/// min < max.
class DatasetSchema {
 public:
  DatasetSchema(std::vector<ColumnSpec> columns,
                std::vector<std::string> quasi_identifiers);

  const std::vector<ColumnSpec>& columns() const { return columns_; }
  const ColumnSpec& column(std::size_t i) const { return columns_.at(i); }
  std::size_t n_columns() const { return columns_.size(); }

  /// Index of a column by name; throws Error if absent.
  std::size_t index_of(const std::string& name) const;
  bool has_column(const std::string& name) const;

  std::size_t time_index() const { return time_index_; }
  std::size_t event_index() const { return event_index_; }

  const std::vector<std::string>& quasi_identifiers() const {
    return quasi_identifiers_;
  }
  bool is_quasi_identifier(const std::string& name) const;

 private:
  std::vector<ColumnSpec> columns_;
  std::vector<std::string> quasi_identifiers_;
  std::size_t time_index_ = 0;
  std::size_t event_index_ = 0;
};

using SchemaPtr = std::shared_ptr<const DatasetSchema>;

}  // namespace survaudit

#endif  // SURVAUDIT_CORE_SCHEMA_HPP
