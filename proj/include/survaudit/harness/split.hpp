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

#ifndef SURVAUDIT_HARNESS_SPLIT_HPP
#define SURVAUDIT_HARNESS_SPLIT_HPP

#include <cstdint>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit::harness {

/// Deterministic 70/10/20 partition stratified on the event indicator:
/// within-stratum shuffle, then largest-remainder allocation, so event
/// prevalence per part stays within one subject of proportional. Train and
/// valid together form the 80% used for generator fitting.
struct SplitPlan {
  std::uint64_t seed = 0;
  double train_fraction = 0.70;
  double valid_fraction = 0.10;
  double test_fraction = 0.20;
  std::vector<std::size_t> train;
  std::vector<std::size_t> valid;
  std::vector<std::size_t> test;

  std::vector<std::size_t> train_valid() const;
};

/// Throws below 10 rows or when the event column has missing entries.
SplitPlan stratified_split(const DataTable& table, std::uint64_t seed);

}  // namespace survaudit::harness

#endif  // SURVAUDIT_HARNESS_SPLIT_HPP
