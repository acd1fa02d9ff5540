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

#ifndef SURVAUDIT_HARNESS_REPORT_HPP
#define SURVAUDIT_HARNESS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "survaudit/core/schema.hpp"

namespace survaudit::harness {

/// Nested record of every score the audit produced, with provenance
/// metadata. Field order is fixed by construction (insertion-ordered JSON),
/// so identical runs serialize byte for byte.
struct MetricReport {
  nlohmann::ordered_json data;
  bool has_failures = false;

  std::string to_string() const { return data.dump(2) + "\n"; }
  static MetricReport from_string(const std::string& text);

  void save(const std::string& path) const;
};

/// Flat tabular export of the utility block: one row per dataset x
/// paradigm, one "c (ibs)" column per model family.
std::string utility_table_csv(const MetricReport& report);

}  // namespace survaudit::harness

#endif  // SURVAUDIT_HARNESS_REPORT_HPP
