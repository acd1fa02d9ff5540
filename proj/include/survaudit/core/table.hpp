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

#ifndef SURVAUDIT_CORE_TABLE_HPP
#define SURVAUDIT_CORE_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "survaudit/core/schema.hpp"

namespace survaudit {

/// Column-major table with an explicit missingness mask.
///
/// Continuous columns hold reals; binary/categorical columns hold integer
/// category codes stored as doubles. A cell whose mask bit is set carries no
/// data; every consumer must consult the mask before reading the value.
/// Tables are treated as immutable once built; operations return new tables.
class DataTable {
 public:
  DataTable(SchemaPtr schema, std::size_t n_rows);
  DataTable(SchemaPtr schema, std::vector<std::vector<double>> values,
            std::vector<std::vector<std::uint8_t>> missing);

  const DatasetSchema& schema() const { return *schema_; }
  const SchemaPtr& schema_ptr() const { return schema_; }
  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_columns() const { return values_.size(); }

  double value(std::size_t col, std::size_t row) const {
    return values_[col][row];
  }
  bool is_missing(std::size_t col, std::size_t row) const {
    return missing_[col][row] != 0;
  }
  const std::vector<double>& column(std::size_t col) const {
    return values_[col];
  }
  const std::vector<std::uint8_t>& mask(std::size_t col) const {
    return missing_[col];
  }

  std::size_t col_index(const std::string& name) const {
    return schema_->index_of(name);
  }

  /// Observed (non-missing) values of one column, in row order.
  std::vector<double> observed(std::size_t col) const;
  std::size_t n_missing(std::size_t col) const;
  bool has_missing() const;

  // Mutation is reserved for builders (ingest, impute, generate); audited
  // tables are never modified in place.
  void set(std::size_t col, std::size_t row, double v) {
    values_[col][row] = v;
    missing_[col][row] = 0;
  }
  void set_missing(std::size_t col, std::size_t row) {
    values_[col][row] = 0.0;
    missing_[col][row] = 1;
  }

 private:
  SchemaPtr schema_;
  std::size_t n_rows_;
  std::vector<std::vector<double>> values_;
  std::vector<std::vector<std::uint8_t>> missing_;
};

/// New table holding the given rows (in the given order).
DataTable take_rows(const DataTable& table,
                    const std::vector<std::size_t>& rows);

/// Row-wise concatenation; tables must share a schema object or equal layout.
DataTable concat_rows(const DataTable& a, const DataTable& b);

/// True when both tables reference schemas with identical column layout.
bool schemas_compatible(const DatasetSchema& a, const DatasetSchema& b);

/// FNV-1a over a canonical byte serialization (schema names, values, mask);
/// used for dataset provenance in reports.
std::uint64_t content_hash(const DataTable& table);

}  // namespace survaudit

#endif  // SURVAUDIT_CORE_TABLE_HPP
