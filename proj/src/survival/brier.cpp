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

#include "survaudit/survival/brier.hpp"

#include <algorithm>
#include <cmath>

#include "survaudit/core/schema.hpp"
#include "survaudit/util/stats.hpp"

namespace survaudit::surv {

namespace {
constexpr double kMinCensorSurvival = 1e-4;
}

IbsResult integrated_brier(const Eigen::MatrixXd& surv,
                           const std::vector<double>& grid,
                           const std::vector<double>& times,
                           const std::vector<int>& events,
                           const KMCurve& censor_km) {
  std::size_t n = times.size();
  if (events.size() != n) throw Error("integrated_brier: length mismatch");
  if (static_cast<std::size_t>(surv.rows()) != n ||
      static_cast<std::size_t>(surv.cols()) != grid.size())
    throw Error("integrated_brier: survival matrix shape mismatch");
  if (grid.empty()) throw Error("integrated_brier: empty grid");

  IbsResult result;
  result.brier.resize(grid.size(), 0.0);

  // Per-subject weight at the subject's own time, 1/G(t_i-).
  std::vector<double> weight_at_event(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double g = censor_km.at_left(times[i]);
    if (g < kMinCensorSurvival) {
      g = kMinCensorSurvival;
      result.weights_capped = true;
    }
    weight_at_event[i] = 1.0 / g;
  }

  for (std::size_t k = 0; k < grid.size(); ++k) {
    double t = grid[k];
    double g_t = censor_km.at(t);
    if (g_t < kMinCensorSurvival) {
      g_t = kMinCensorSurvival;
      result.weights_capped = true;
    }
    double w_alive = 1.0 / g_t;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = surv(i, k);
      if (times[i] <= t && events[i] != 0) {
        sum += s * s * weight_at_event[i];
      } else if (times[i] > t) {
        sum += (1.0 - s) * (1.0 - s) * w_alive;
      }
      // Censored at or before t contributes zero.
    }
    result.brier[k] = sum / static_cast<double>(n);
  }

  double span = grid.back() - grid.front();
  if (span <= 0.0 || grid.size() == 1) {
    result.value = result.brier.front();
    return result;
  }
  double integral = 0.0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k)
    integral += 0.5 * (result.brier[k] + result.brier[k + 1]) *
                (grid[k + 1] - grid[k]);
  result.value = integral / span;
  return result;
}

std::vector<double> ibs_grid(const std::vector<double>& times,
                             const std::vector<int>& events) {
  if (times.empty() || times.size() != events.size())
    throw Error("ibs_grid: bad inputs");
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  double lo = quantile_sorted(sorted, 0.10);
  double hi = quantile_sorted(sorted, 0.90);

  std::vector<double> grid;
  grid.push_back(lo);
  std::vector<double> event_times;
  for (std::size_t i = 0; i < times.size(); ++i)
    if (events[i] != 0 && times[i] > lo && times[i] < hi)
      event_times.push_back(times[i]);
  std::sort(event_times.begin(), event_times.end());
  event_times.erase(std::unique(event_times.begin(), event_times.end()),
                    event_times.end());
  grid.insert(grid.end(), event_times.begin(), event_times.end());
  if (hi > lo) grid.push_back(hi);
  return grid;
}

}  // namespace survaudit::surv
