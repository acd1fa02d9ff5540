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

#include "survaudit/fidelity/km_compare.hpp"

#include <algorithm>
#include <cmath>

#include "survaudit/core/schema.hpp"

namespace survaudit::fidelity {

KmMetrics km_metrics(const surv::KMCurve& real_curve,
                     const surv::KMCurve& synth_curve) {
  double t_star = std::min(real_curve.t_end, synth_curve.t_end);
  if (!(t_star > 0.0)) throw Error("km_metrics: non-positive common horizon");

  // Breakpoints: 0, every step of either curve inside (0, T*], and T*.
  std::vector<double> pts{0.0};
  for (double t : real_curve.times)
    if (t <= t_star) pts.push_back(t);
  for (double t : synth_curve.times)
    if (t <= t_star) pts.push_back(t);
  pts.push_back(t_star);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Both curves are constant on each [p_k, p_{k+1}); exact integration.
  double signed_area = 0.0, abs_area = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    double width = pts[k + 1] - pts[k];
    double gap = synth_curve.at(pts[k]) - real_curve.at(pts[k]);
    signed_area += gap * width;
    abs_area += std::fabs(gap) * width;
  }

  KmMetrics metrics;
  metrics.horizon = t_star;
  metrics.optimism = signed_area / t_star;
  metrics.km_divergence = abs_area / t_star;
  metrics.short_sightedness = std::max(
      0.0, (real_curve.t_end - synth_curve.t_end) / real_curve.t_end);
  return metrics;
}

}  // namespace survaudit::fidelity
