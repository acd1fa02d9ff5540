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

#ifndef SURVAUDIT_SURVIVAL_CONCORDANCE_HPP
#define SURVAUDIT_SURVIVAL_CONCORDANCE_HPP

#include <cstddef>
#include <vector>

namespace survaudit::surv {

struct ConcordanceCounts {
  std::size_t comparable = 0;
  std::size_t concordant = 0;
  std::size_t tied_risk = 0;
};

/// Harrell's concordance. Comparable pairs are (i, j) with t_i < t_j and
/// event_i = 1; concordant when risk_i > risk_j; risk ties count 0.5.
/// O(n log n) via a Fenwick tree over risk ranks. Throws when no pair is
/// comparable.
double c_index(const std::vector<double>& times, const std::vector<int>& events,
               const std::vector<double>& risks);

ConcordanceCounts concordance_counts(const std::vector<double>& times,
                                     const std::vector<int>& events,
                                     const std::vector<double>& risks);

}  // namespace survaudit::surv

#endif  // SURVAUDIT_SURVIVAL_CONCORDANCE_HPP
