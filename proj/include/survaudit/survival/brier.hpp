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

#ifndef SURVAUDIT_SURVIVAL_BRIER_HPP
#define SURVAUDIT_SURVIVAL_BRIER_HPP

#include <vector>

#include <Eigen/Dense>

#include "survaudit/survival/kaplan_meier.hpp"

namespace survaudit::surv {

struct IbsResult {
  double value = 0.0;
  std::vector<double> brier;  // BS(t) per grid point
  bool weights_capped = false;
};

/// Censoring-weighted Brier score integrated over the grid (trapezoid rule,
/// divided by the grid span). Weights follow Graf: 1/G(t_i-) for subjects
/// dead by t, 1/G(t) for subjects past t, 0 for earlier censorings. G below
/// 1e-4 caps the weight and sets a flag.
///
/// `surv` is n x grid; `censor_km` is the censoring Kaplan-Meier fitted on
/// the training split.
IbsResult integrated_brier(const Eigen::MatrixXd& surv,
                           const std::vector<double>& grid,
                           const std::vector<double>& times,
                           const std::vector<int>& events,
                           const KMCurve& censor_km);

/// Evaluation grid: unique event times strictly inside the 10th-90th
/// percentile band of the observed follow-up times, plus both band
/// endpoints.
std::vector<double> ibs_grid(const std::vector<double>& times,
                             const std::vector<int>& events);

}  // namespace survaudit::surv

#endif  // SURVAUDIT_SURVIVAL_BRIER_HPP
