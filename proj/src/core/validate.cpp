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

#include "survaudit/core/validate.hpp"

#include <cmath>

namespace survaudit {

std::size_t ValidationReport::count(ViolationKind kind) const {
  std::size_t n = 0;
  for (const Violation& v : violations)
    if (v.kind == kind) ++n;
  return n;
}

ValidationReport validate(const DataTable& table) {
  ValidationReport report;
  const DatasetSchema& schema = table.schema();
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    const ColumnSpec& spec = schema.column(c);
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(c, r)) {
        if (spec.is_outcome()) {
          report.violations.push_back(
              {ViolationKind::kMissingOutcome, spec.name, r, 0.0,
               "missing " + to_string(spec.role) + " entry"});
        } else if (!spec.missingness_allowed) {
          report.violations.push_back(
              {ViolationKind::kDisallowedMissing, spec.name, r, 0.0,
               "missing cell in a column that forbids missingness"});
        }
        continue;
      }
      double v = table.value(c, r);
      if (!std::isfinite(v)) {
        report.violations.push_back({ViolationKind::kNonFinite, spec.name, r,
                                     v, "non-finite value"});
        continue;
      }
      if (spec.is_continuous()) {
        if (spec.has_range() &&
            (v < *spec.plausible_min || v > *spec.plausible_max)) {
          report.violations.push_back(
              {ViolationKind::kOutOfRange, spec.name, r, v,
               "value outside plausible range [" +
                   std::to_string(*spec.plausible_min) + ", " +
                   std::to_string(*spec.plausible_max) + "]"});
        }
      } else {
        double integral;
        bool is_code = std::modf(v, &integral) == 0.0 && v >= 0.0 &&
                       v < static_cast<double>(spec.n_categories());
        if (!is_code) {
          report.violations.push_back(
              {ViolationKind::kInvalidCategoryCode, spec.name, r, v,
               "invalid code for " + std::to_string(spec.n_categories()) +
                   "-category column"});
        }
      }
    }
  }
  return report;
}

}  // namespace survaudit
