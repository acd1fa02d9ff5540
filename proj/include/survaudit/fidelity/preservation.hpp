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

#ifndef SURVAUDIT_FIDELITY_PRESERVATION_HPP
#define SURVAUDIT_FIDELITY_PRESERVATION_HPP

#include <string>
#include <vector>

#include "survaudit/survival/cox.hpp"

namespace survaudit::fidelity {

struct FeatureDetail {
  std::string name;
  surv::UnivariateCox real_fit;
  surv::UnivariateCox synth_fit;
  bool significant_real = false;
  bool significant_synth = false;
  bool preserved = false;  // significant in both, same coefficient sign
};

/// Univariate Cox significance (p < 0.05) with matching sign, scored as
/// recall against the real dataset's significant features and precision
/// against the synthetic one's. Non-estimable features are excluded.
struct PreservationResult {
  std::vector<FeatureDetail> detail;
  std::size_t true_positives = 0;
  std::size_t positives_real = 0;
  std::size_t positives_synth = 0;
  bool recall_defined = false;
  bool precision_defined = false;
  double recall = 0.0;
  double precision = 0.0;
};

PreservationResult feature_preservation(const surv::SurvivalData& real,
                                        const surv::SurvivalData& synth);

}  // namespace survaudit::fidelity

#endif  // SURVAUDIT_FIDELITY_PRESERVATION_HPP
