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

#include "survaudit/ingest/missingness.hpp"

namespace survaudit::ingest {

bool is_indicator_column(const std::string& name) {
  const std::string suffix = kIndicatorSuffix;
  return name.size() > suffix.size() &&
         name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string indicator_base(const std::string& name) {
  if (!is_indicator_column(name)) throw Error("not an indicator: " + name);
  return name.substr(0, name.size() - std::string(kIndicatorSuffix).size());
}

DataTable add_missingness_indicators(const DataTable& table) {
  const DatasetSchema& schema = table.schema();
  std::vector<ColumnSpec> specs = schema.columns();
  std::vector<std::size_t> flagged;
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    if (table.n_missing(c) == 0) continue;
    flagged.push_back(c);
    ColumnSpec ind;
    ind.name = schema.column(c).name + kIndicatorSuffix;
    ind.kind = ColumnKind::kBinary;
    ind.role = ColumnRole::kFeature;
    ind.missingness_allowed = false;
    specs.push_back(std::move(ind));
  }
  auto new_schema = std::make_shared<DatasetSchema>(
      std::move(specs), schema.quasi_identifiers());

  DataTable out(new_schema, table.n_rows());
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(c, r))
        out.set_missing(c, r);
      else
        out.set(c, r, table.value(c, r));
    }
  }
  for (std::size_t k = 0; k < flagged.size(); ++k) {
    std::size_t dst = table.n_columns() + k;
    std::size_t src = flagged[k];
    for (std::size_t r = 0; r < table.n_rows(); ++r)
      out.set(dst, r, table.is_missing(src, r) ? 1.0 : 0.0);
  }
  return out;
}

DataTable drop_indicator_columns(const DataTable& table) {
  const DatasetSchema& schema = table.schema();
  std::vector<ColumnSpec> specs;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    if (is_indicator_column(schema.column(c).name)) continue;
    specs.push_back(schema.column(c));
    keep.push_back(c);
  }
  auto new_schema = std::make_shared<DatasetSchema>(
      std::move(specs), schema.quasi_identifiers());
  DataTable out(new_schema, table.n_rows());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    std::size_t c = keep[k];
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(c, r))
        out.set_missing(k, r);
      else
        out.set(k, r, table.value(c, r));
    }
  }
  return out;
}

DataTable reapply_missingness(const DataTable& complete,
                              const DataTable& indicators) {
  if (complete.has_missing())
    throw Error("reapply_missingness: input table has missing cells");
  if (indicators.n_rows() != complete.n_rows())
    throw Error("reapply_missingness: row count mismatch (" +
                std::to_string(complete.n_rows()) + " vs " +
                std::to_string(indicators.n_rows()) + ")");

  DataTable out = drop_indicator_columns(complete);
  const DatasetSchema& ind_schema = indicators.schema();
  for (std::size_t c = 0; c < ind_schema.n_columns(); ++c) {
    const std::string& name = ind_schema.column(c).name;
    if (!is_indicator_column(name)) continue;
    std::string base = indicator_base(name);
    if (!out.schema().has_column(base))
      throw Error("reapply_missingness: indicator '" + name +
                  "' has no matching column");
    std::size_t target = out.schema().index_of(base);
    for (std::size_t r = 0; r < indicators.n_rows(); ++r) {
      if (!indicators.is_missing(c, r) && indicators.value(c, r) == 1.0)
        out.set_missing(target, r);
    }
  }
  return out;
}

MissingnessProfile missingness_profile(const DataTable& table) {
  MissingnessProfile profile;
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    profile.columns.push_back(table.schema().column(c).name);
    profile.fraction.push_back(
        table.n_rows() == 0
            ? 0.0
            : static_cast<double>(table.n_missing(c)) /
                  static_cast<double>(table.n_rows()));
  }
  return profile;
}

}  // namespace survaudit::ingest
