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

#ifndef SURVAUDIT_UTIL_STATS_HPP
#define SURVAUDIT_UTIL_STATS_HPP

#include <cstddef>
#include <vector>

namespace survaudit {

double mean(const std::vector<double>& v);

/// Population variance (ddof=0).
double variance(const std::vector<double>& v);

/// Sample variance (ddof=1); requires n >= 2.
double sample_variance(const std::vector<double>& v);

/// Median via sorting a copy; even n averages the two middle values.
double median(const std::vector<double>& v);

/// Linear-interpolation quantile of a sample, p in [0,1]
/// (h = p*(n-1) convention).
double quantile(std::vector<double> v, double p);
double quantile_sorted(const std::vector<double>& sorted, double p);

/// Pearson correlation; returns false when either side has zero variance.
bool pearson(const std::vector<double>& x, const std::vector<double>& y,
             double& out);

/// 1-based average ranks (ties share their mean rank).
std::vector<double> average_ranks(const std::vector<double>& v);

/// Standard normal CDF / quantile (Acklam's rational approximation refined
/// by one Halley step; |error| < 1e-15 over (0,1)).
double normal_cdf(double z);
double normal_quantile(double p);

/// Two-sample Kolmogorov-Smirnov statistic sup|F1 - F2|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

}  // namespace survaudit

#endif  // SURVAUDIT_UTIL_STATS_HPP
