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

#ifndef SURVAUDIT_INGEST_MISSINGNESS_HPP
#define SURVAUDIT_INGEST_MISSINGNESS_HPP

#include <string>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit::ingest {

/// Suffix carried by indicator columns: `<name>__miss`, 1 = missing,
/// 0 = present.
inline constexpr const char* kIndicatorSuffix = "__miss";

bool is_indicator_column(const std::string& name);
std::string indicator_base(const std::string& name);

/// Appends a binary indicator column for every column containing at least
/// one missing cell. The original mask is retained.
DataTable add_missingness_indicators(const DataTable& table);

/// Masks every cell whose indicator is 1, then removes the indicator
/// columns. `complete` must have no missing cells; `indicators` is any table
/// whose `<name>__miss` columns align with `complete` by name and row count.
DataTable reapply_missingness(const DataTable& complete,
                              const DataTable& indicators);

/// Drops `__miss` columns without touching the mask.
DataTable drop_indicator_columns(const DataTable& table);

struct MissingnessProfile {
  std::vector<std::string> columns;
  std::vector<double> fraction;  // masked cells / n_rows, exact
};

MissingnessProfile missingness_profile(const DataTable& table);

}  // namespace survaudit::ingest

#endif  // SURVAUDIT_INGEST_MISSINGNESS_HPP
