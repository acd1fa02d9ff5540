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

#ifndef SURVAUDIT_INGEST_CONSTRAINTS_HPP
#define SURVAUDIT_INGEST_CONSTRAINTS_HPP

#include <string>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit::ingest {

struct ClipResult {
  DataTable table;
  std::vector<std::size_t> clipped_per_column;  // aligned with schema
  std::size_t total_clipped = 0;
};

/// Replaces continuous values outside their plausible range by the nearest
/// bound. Missing cells stay missing. The remedy for real data (synthetic
/// candidates go through filter_implausible instead).
ClipResult clip_to_ranges(const DataTable& table);

struct FilterResult {
  DataTable table;
  std::vector<std::size_t> dropped_rows;  // original row indices, ascending
};

/// Drops rows that violate SBP > DBP (when both columns exist and both cells
/// are present) or any plausible-range bound on a non-missing cell. Rows
/// with either pressure missing are kept: the rule cannot fire on absent
/// values.
FilterResult filter_implausible(const DataTable& table,
                                const std::string& sbp_column = "SBP",
                                const std::string& dbp_column = "DBP");

}  // namespace survaudit::ingest

#endif  // SURVAUDIT_INGEST_CONSTRAINTS_HPP
