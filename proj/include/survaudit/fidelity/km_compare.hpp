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

#ifndef SURVAUDIT_FIDELITY_KM_COMPARE_HPP
#define SURVAUDIT_FIDELITY_KM_COMPARE_HPP

#include "survaudit/survival/kaplan_meier.hpp"

namespace survaudit::fidelity {

/// Survival-curve comparison on [0, T*], T* = min of the two curve horizons,
/// with exact step-function integration.
///   optimism          signed mean gap (positive = synthetic lives longer)
///   km_divergence     mean absolute gap
///   short_sightedness max(0, (t_end_real - t_end_synth) / t_end_real)
struct KmMetrics {
  double optimism = 0.0;
  double km_divergence = 0.0;
  double short_sightedness = 0.0;
  double horizon = 0.0;  // T*
};

KmMetrics km_metrics(const surv::KMCurve& real_curve,
                     const surv::KMCurve& synth_curve);

}  // namespace survaudit::fidelity

#endif  // SURVAUDIT_FIDELITY_KM_COMPARE_HPP
