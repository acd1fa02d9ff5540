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

#include "survaudit/survival/kaplan_meier.hpp"

#include <algorithm>
#include <numeric>

#include "survaudit/core/schema.hpp"

namespace survaudit::surv {

double KMCurve::at(double t) const {
  // Last step with time <= t.
  auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return 1.0;
  return survival[static_cast<std::size_t>(it - times.begin()) - 1];
}

double KMCurve::at_left(double t) const {
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.begin()) return 1.0;
  return survival[static_cast<std::size_t>(it - times.begin()) - 1];
}

KMCurve kaplan_meier(const std::vector<double>& times,
                     const std::vector<int>& events) {
  if (times.empty()) throw Error("kaplan_meier: empty input");
  if (times.size() != events.size())
    throw Error("kaplan_meier: times/events length mismatch");

  std::vector<std::size_t> order(times.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return times[a] < times[b];
  });

  KMCurve curve;
  curve.t_end = times[order.back()];
  double s = 1.0;
  std::size_t i = 0;
  std::size_t n = times.size();
  while (i < n) {
    double t = times[order[i]];
    std::size_t deaths = 0;
    std::size_t j = i;
    while (j < n && times[order[j]] == t) {
      deaths += (events[order[j]] != 0);
      ++j;
    }
    std::size_t at_risk = n - i;
    if (deaths > 0) {
      s *= 1.0 - static_cast<double>(deaths) / static_cast<double>(at_risk);
      curve.times.push_back(t);
      curve.survival.push_back(s);
      curve.n_at_risk.push_back(at_risk);
    }
    i = j;
  }
  return curve;
}

KMCurve censoring_km(const std::vector<double>& times,
                     const std::vector<int>& events) {
  std::vector<int> inverted(events.size());
  for (std::size_t i = 0; i < events.size(); ++i)
    inverted[i] = events[i] != 0 ? 0 : 1;
  return kaplan_meier(times, inverted);
}

}  // namespace survaudit::surv
