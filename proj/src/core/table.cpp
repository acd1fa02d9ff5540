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

#include "survaudit/core/table.hpp"

#include <cstring>

namespace survaudit {

DataTable::DataTable(SchemaPtr schema, std::size_t n_rows)
    : schema_(std::move(schema)), n_rows_(n_rows) {
  if (!schema_) throw Error("table: null schema");
  values_.assign(schema_->n_columns(), std::vector<double>(n_rows, 0.0));
  missing_.assign(schema_->n_columns(),
                  std::vector<std::uint8_t>(n_rows, 0));
}

DataTable::DataTable(SchemaPtr schema, std::vector<std::vector<double>> values,
                     std::vector<std::vector<std::uint8_t>> missing)
    : schema_(std::move(schema)),
      values_(std::move(values)),
      missing_(std::move(missing)) {
  if (!schema_) throw Error("table: null schema");
  if (values_.size() != schema_->n_columns() ||
      missing_.size() != schema_->n_columns())
    throw Error("table: column count does not match schema");
  n_rows_ = values_.empty() ? 0 : values_[0].size();
  for (std::size_t c = 0; c < values_.size(); ++c) {
    if (values_[c].size() != n_rows_ || missing_[c].size() != n_rows_)
      throw Error("table: ragged column '" + schema_->column(c).name + "'");
  }
}

std::vector<double> DataTable::observed(std::size_t col) const {
  std::vector<double> out;
  out.reserve(n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r)
    if (!missing_[col][r]) out.push_back(values_[col][r]);
  return out;
}

std::size_t DataTable::n_missing(std::size_t col) const {
  std::size_t n = 0;
  for (std::uint8_t m : missing_[col]) n += m;
  return n;
}

bool DataTable::has_missing() const {
  for (std::size_t c = 0; c < n_columns(); ++c)
    if (n_missing(c) > 0) return true;
  return false;
}

DataTable take_rows(const DataTable& table,
                    const std::vector<std::size_t>& rows) {
  DataTable out(table.schema_ptr(), rows.size());
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t r = rows[i];
      if (r >= table.n_rows()) throw Error("take_rows: index out of range");
      if (table.is_missing(c, r))
        out.set_missing(c, i);
      else
        out.set(c, i, table.value(c, r));
    }
  }
  return out;
}

bool schemas_compatible(const DatasetSchema& a, const DatasetSchema& b) {
  if (&a == &b) return true;
  if (a.n_columns() != b.n_columns()) return false;
  for (std::size_t i = 0; i < a.n_columns(); ++i) {
    const ColumnSpec& x = a.column(i);
    const ColumnSpec& y = b.column(i);
    if (x.name != y.name || x.kind != y.kind || x.role != y.role ||
        x.categories != y.categories)
      return false;
  }
  return true;
}

DataTable concat_rows(const DataTable& a, const DataTable& b) {
  if (!schemas_compatible(a.schema(), b.schema()))
    throw Error("concat_rows: incompatible schemas");
  DataTable out(a.schema_ptr(), a.n_rows() + b.n_rows());
  for (std::size_t c = 0; c < a.n_columns(); ++c) {
    for (std::size_t r = 0; r < a.n_rows(); ++r) {
      if (a.is_missing(c, r))
        out.set_missing(c, r);
      else
        out.set(c, r, a.value(c, r));
    }
    for (std::size_t r = 0; r < b.n_rows(); ++r) {
      if (b.is_missing(c, r))
        out.set_missing(c, a.n_rows() + r);
      else
        out.set(c, a.n_rows() + r, b.value(c, r));
    }
  }
  return out;
}

namespace {

void hash_bytes(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
}

}  // namespace

std::uint64_t content_hash(const DataTable& table) {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    const std::string& name = table.schema().column(c).name;
    hash_bytes(h, name.data(), name.size());
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      std::uint8_t m = table.is_missing(c, r) ? 1 : 0;
      hash_bytes(h, &m, 1);
      if (!m) {
        double v = table.value(c, r);
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        hash_bytes(h, &bits, sizeof(bits));
      }
    }
  }
  return h;
}

}  // namespace survaudit
