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

#include "survaudit/ingest/constraints.hpp"

namespace survaudit::ingest {

ClipResult clip_to_ranges(const DataTable& table) {
  ClipResult result{table, std::vector<std::size_t>(table.n_columns(), 0), 0};
  const DatasetSchema& schema = table.schema();
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    const ColumnSpec& spec = schema.column(c);
    if (!spec.is_continuous() || !spec.has_range()) continue;
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(c, r)) continue;
      double v = table.value(c, r);
      if (v < *spec.plausible_min) {
        result.table.set(c, r, *spec.plausible_min);
        ++result.clipped_per_column[c];
      } else if (v > *spec.plausible_max) {
        result.table.set(c, r, *spec.plausible_max);
        ++result.clipped_per_column[c];
      }
    }
  }
  for (std::size_t n : result.clipped_per_column) result.total_clipped += n;
  return result;
}

FilterResult filter_implausible(const DataTable& table,
                                const std::string& sbp_column,
                                const std::string& dbp_column) {
  const DatasetSchema& schema = table.schema();
  bool pressure_rule =
      schema.has_column(sbp_column) && schema.has_column(dbp_column);
  std::size_t sbp = pressure_rule ? schema.index_of(sbp_column) : 0;
  std::size_t dbp = pressure_rule ? schema.index_of(dbp_column) : 0;

  std::vector<std::size_t> kept, dropped;
  kept.reserve(table.n_rows());
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    bool bad = false;
    if (pressure_rule && !table.is_missing(sbp, r) &&
        !table.is_missing(dbp, r) &&
        table.value(sbp, r) <= table.value(dbp, r)) {
      bad = true;
    }
    for (std::size_t c = 0; !bad && c < table.n_columns(); ++c) {
      const ColumnSpec& spec = schema.column(c);
      if (!spec.is_continuous() || !spec.has_range() || table.is_missing(c, r))
        continue;
      double v = table.value(c, r);
      if (v < *spec.plausible_min || v > *spec.plausible_max) bad = true;
    }
    (bad ? dropped : kept).push_back(r);
  }
  return {take_rows(table, kept), std::move(dropped)};
}

}  // namespace survaudit::ingest
