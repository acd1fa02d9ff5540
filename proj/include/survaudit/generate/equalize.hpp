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

#ifndef SURVAUDIT_GENERATE_EQUALIZE_HPP
#define SURVAUDIT_GENERATE_EQUALIZE_HPP

#include <string>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit::gen {

/// Monotone quantile map onto a reference sample (exact histogram
/// equalization for continuous data): v -> Q_ref(F_input(v)).
struct QuantileMap {
  std::vector<double> reference_sorted;
};

/// Requires at least 2 distinct reference values.
QuantileMap fit_equalizer(const std::vector<double>& reference);

/// Input positions use mid-rank plotting points (rank - 0.5)/n, so a
/// constant column maps to the reference median. Rank order is preserved.
std::vector<double> apply_equalizer(const QuantileMap& map,
                                    const std::vector<double>& column);

/// Equalizes one continuous column in place of a copy; every other column
/// and the missingness mask are untouched (missing cells stay missing).
DataTable equalize_column(const DataTable& table, const std::string& column,
                          const QuantileMap& map);

}  // namespace survaudit::gen

#endif  // SURVAUDIT_GENERATE_EQUALIZE_HPP
