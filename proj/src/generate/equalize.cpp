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

#include "survaudit/generate/equalize.hpp"

#include <algorithm>

#include "survaudit/util/stats.hpp"

namespace survaudit::gen {

QuantileMap fit_equalizer(const std::vector<double>& reference) {
  if (reference.empty()) throw Error("fit_equalizer: empty reference");
  QuantileMap map;
  map.reference_sorted = reference;
  std::sort(map.reference_sorted.begin(), map.reference_sorted.end());
  if (map.reference_sorted.front() == map.reference_sorted.back())
    throw Error("fit_equalizer: reference needs at least 2 distinct values");
  return map;
}

std::vector<double> apply_equalizer(const QuantileMap& map,
                                    const std::vector<double>& column) {
  if (column.empty()) throw Error("apply_equalizer: empty input");
  std::vector<double> ranks = average_ranks(column);
  double n = static_cast<double>(column.size());
  std::vector<double> out(column.size());
  for (std::size_t i = 0; i < column.size(); ++i) {
    double u = (ranks[i] - 0.5) / n;
    out[i] = quantile_sorted(map.reference_sorted, u);
  }
  return out;
}

DataTable equalize_column(const DataTable& table, const std::string& column,
                          const QuantileMap& map) {
  std::size_t col = table.col_index(column);
  if (!table.schema().column(col).is_continuous())
    throw Error("equalize_column: '" + column + "' is not continuous");

  std::vector<double> values;
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.is_missing(col, r)) continue;
    values.push_back(table.value(col, r));
    rows.push_back(r);
  }
  if (values.empty()) return table;
  std::vector<double> mapped = apply_equalizer(map, values);
  DataTable out = table;
  for (std::size_t i = 0; i < rows.size(); ++i) out.set(col, rows[i], mapped[i]);
  return out;
}

}  // namespace survaudit::gen
