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

#ifndef SURVAUDIT_CORE_NORMALIZE_HPP
#define SURVAUDIT_CORE_NORMALIZE_HPP

#include <string>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit {

enum class NormalizationMode { kMinMax, kZScore };

/// Per-column statistics for min-max or z-score scaling of continuous
/// columns. Degenerate columns (max==min / sd==0) transform to 0 instead of
/// erroring so audits of collapsed synthetic columns still complete.
struct NormalizationParams {
  NormalizationMode mode = NormalizationMode::kMinMax;
  // stat_a = min or mean, stat_b = max or sd, one entry per schema column
  // (entries for non-continuous columns are unused).
  std::vector<double> stat_a;
  std::vector<double> stat_b;
  std::vector<std::uint8_t> degenerate;
  std::string fitted_on;

  bool is_degenerate(std::size_t col) const { return degenerate[col] != 0; }
};

/// Statistics pooled over the non-missing values of all given tables.
/// z-score uses the population standard deviation. Throws if a continuous
/// column has no observed value in the pooled union.
NormalizationParams fit_normalization(const std::vector<const DataTable*>& tables,
                                      NormalizationMode mode,
                                      std::string fitted_on = "");
NormalizationParams fit_normalization(const DataTable& table,
                                      NormalizationMode mode,
                                      std::string fitted_on = "");

/// Transforms continuous columns; categorical/binary columns and the
/// missingness mask are untouched.
DataTable apply_normalization(const DataTable& table,
                              const NormalizationParams& params);

/// Inverse of apply_normalization for non-degenerate columns.
DataTable invert_normalization(const DataTable& table,
                               const NormalizationParams& params);

}  // namespace survaudit

#endif  // SURVAUDIT_CORE_NORMALIZE_HPP
