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

#ifndef SURVAUDIT_HARNESS_AUDIT_HPP
#define SURVAUDIT_HARNESS_AUDIT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "survaudit/harness/report.hpp"
#include "survaudit/impute/impute.hpp"

namespace survaudit::harness {

/// Root seed used when none is given; every random component draws a named
/// sub-stream from it.
inline constexpr std::uint64_t kDefaultSeed = 1729;

struct AuditConfig {
  std::uint64_t seed = kDefaultSeed;
  impute::ImputeMethod impute_method = impute::ImputeMethod::kChained;
  // Histogram-equalize the time column of each synthetic dataset against
  // the real training data before any evaluation.
  bool equalize_time = false;
  std::size_t mia_folds = 4;
  std::size_t aia_folds = 5;
  std::size_t nnaa_iterations = 30;
  // Clip the real table to plausible ranges and drop implausible synthetic
  // rows before evaluating; disabling this is the raw-mode opt-out.
  bool preclean = true;
  std::size_t threads = 1;
};

/// Runs the whole battery: validation/preclean, significance tests on
/// observed cells, uniform imputation, fidelity and KM metrics, feature
/// preservation, the four paradigms x {Cox, RSF}, and the privacy suite.
/// Section failures are recorded in the report and the audit continues.
/// Identical inputs, config and seed produce byte-identical reports.
MetricReport full_audit(
    const DataTable& real,
    const std::vector<std::pair<std::string, DataTable>>& synths,
    const AuditConfig& config);

}  // namespace survaudit::harness

#endif  // SURVAUDIT_HARNESS_AUDIT_HPP
