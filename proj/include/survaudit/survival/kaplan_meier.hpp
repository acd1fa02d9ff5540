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

#ifndef SURVAUDIT_SURVIVAL_KAPLAN_MEIER_HPP
#define SURVAUDIT_SURVIVAL_KAPLAN_MEIER_HPP

#include <cstddef>
#include <vector>

namespace survaudit::surv {

/// Product-limit survival curve. Steps occur at distinct event times only;
/// subjects censored at an event time count as at risk for that time.
struct KMCurve {
  std::vector<double> times;            // distinct death times, ascending
  std::vector<double> survival;         // S(t_i), non-increasing
  std::vector<std::size_t> n_at_risk;   // at risk just before t_i
  double t_end = 0.0;                   // last observed time, event or censor

  /// S(t): right-continuous step evaluation; 1 before the first death.
  double at(double t) const;
  /// Left limit S(t-): steps strictly before t.
  double at_left(double t) const;
};

KMCurve kaplan_meier(const std::vector<double>& times,
                     const std::vector<int>& events);

/// Kaplan-Meier of the censoring distribution (events inverted), as used for
/// IPCW weights.
KMCurve censoring_km(const std::vector<double>& times,
                     const std::vector<int>& events);

}  // namespace survaudit::surv

#endif  // SURVAUDIT_SURVIVAL_KAPLAN_MEIER_HPP
