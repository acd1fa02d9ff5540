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

#include "survaudit/core/normalize.hpp"

#include <cmath>
#include <limits>

namespace survaudit {

NormalizationParams fit_normalization(
    const std::vector<const DataTable*>& tables, NormalizationMode mode,
    std::string fitted_on) {
  if (tables.empty()) throw Error("fit_normalization: no tables");
  const DatasetSchema& schema = tables[0]->schema();
  for (const DataTable* t : tables)
    if (!schemas_compatible(schema, t->schema()))
      throw Error("fit_normalization: tables do not share a schema");

  NormalizationParams params;
  params.mode = mode;
  params.fitted_on = std::move(fitted_on);
  params.stat_a.assign(schema.n_columns(), 0.0);
  params.stat_b.assign(schema.n_columns(), 0.0);
  params.degenerate.assign(schema.n_columns(), 0);

  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    if (!schema.column(c).is_continuous()) continue;
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    double sum = 0.0, sumsq = 0.0;
    std::size_t n = 0;
    for (const DataTable* t : tables) {
      for (std::size_t r = 0; r < t->n_rows(); ++r) {
        if (t->is_missing(c, r)) continue;
        double v = t->value(c, r);
        mn = std::min(mn, v);
        mx = std::max(mx, v);
        sum += v;
        sumsq += v * v;
        ++n;
      }
    }
    if (n == 0)
      throw Error("fit_normalization: column '" + schema.column(c).name +
                  "' has no observed values");
    if (mode == NormalizationMode::kMinMax) {
      params.stat_a[c] = mn;
      params.stat_b[c] = mx;
      params.degenerate[c] = (mx == mn);
    } else {
      double mean = sum / static_cast<double>(n);
      double var = sumsq / static_cast<double>(n) - mean * mean;
      double sd = var > 0.0 ? std::sqrt(var) : 0.0;
      params.stat_a[c] = mean;
      params.stat_b[c] = sd;
      params.degenerate[c] = (sd == 0.0);
    }
  }
  return params;
}

NormalizationParams fit_normalization(const DataTable& table,
                                      NormalizationMode mode,
                                      std::string fitted_on) {
  return fit_normalization(std::vector<const DataTable*>{&table}, mode,
                           std::move(fitted_on));
}

namespace {

DataTable transform(const DataTable& table, const NormalizationParams& params,
                    bool inverse) {
  const DatasetSchema& schema = table.schema();
  if (params.stat_a.size() != schema.n_columns())
    throw Error("normalization: params do not match schema");
  DataTable out = table;
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    if (!schema.column(c).is_continuous()) continue;
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(c, r)) continue;
      double v = table.value(c, r);
      if (params.is_degenerate(c)) {
        out.set(c, r, inverse ? params.stat_a[c] : 0.0);
        continue;
      }
      if (params.mode == NormalizationMode::kMinMax) {
        double span = params.stat_b[c] - params.stat_a[c];
        out.set(c, r, inverse ? v * span + params.stat_a[c]
                              : (v - params.stat_a[c]) / span);
      } else {
        out.set(c, r, inverse ? v * params.stat_b[c] + params.stat_a[c]
                              : (v - params.stat_a[c]) / params.stat_b[c]);
      }
    }
  }
  return out;
}

}  // namespace

DataTable apply_normalization(const DataTable& table,
                              const NormalizationParams& params) {
  return transform(table, params, false);
}

DataTable invert_normalization(const DataTable& table,
                               const NormalizationParams& params) {
  return transform(table, params, true);
}

}  // namespace survaudit
