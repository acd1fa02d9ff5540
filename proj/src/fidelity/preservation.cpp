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

#include "survaudit/fidelity/preservation.hpp"

namespace survaudit::fidelity {

namespace {
constexpr double kAlpha = 0.05;
}

PreservationResult feature_preservation(const surv::SurvivalData& real,
                                        const surv::SurvivalData& synth) {
  if (real.feature_names != synth.feature_names)
    throw Error("feature_preservation: feature sets differ");

  PreservationResult result;
  for (std::size_t j = 0; j < real.n_features(); ++j) {
    FeatureDetail detail;
    detail.name = real.feature_names[j];
    detail.real_fit = surv::cox_univariate(real, j);
    detail.synth_fit = surv::cox_univariate(synth, j);
    detail.significant_real =
        detail.real_fit.estimable && detail.real_fit.p_value < kAlpha;
    detail.significant_synth =
        detail.synth_fit.estimable && detail.synth_fit.p_value < kAlpha;
    detail.preserved = detail.significant_real && detail.significant_synth &&
                       detail.real_fit.sign == detail.synth_fit.sign;
    result.positives_real += detail.significant_real;
    result.positives_synth += detail.significant_synth;
    result.true_positives += detail.preserved;
    result.detail.push_back(std::move(detail));
  }

  if (result.positives_real > 0) {
    result.recall_defined = true;
    result.recall = static_cast<double>(result.true_positives) /
                    static_cast<double>(result.positives_real);
  }
  if (result.positives_synth > 0) {
    result.precision_defined = true;
    result.precision = static_cast<double>(result.true_positives) /
                       static_cast<double>(result.positives_synth);
  }
  return result;
}

}  // namespace survaudit::fidelity
