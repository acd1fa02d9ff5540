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

#include "survaudit/fidelity/significance.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "survaudit/util/stats.hpp"

namespace survaudit::fidelity {

namespace {

constexpr double kAlpha = 0.05;

TestResult untestable(const std::string& test, const std::string& note) {
  TestResult r;
  r.test = test;
  r.testable = false;
  r.note = note;
  return r;
}

double hypergeom_log_pmf(std::size_t k, std::size_t row1, std::size_t col1,
                         std::size_t total) {
  auto lc = [](std::size_t n, std::size_t r) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(r) + 1.0) -
           std::lgamma(static_cast<double>(n - r) + 1.0);
  };
  return lc(col1, k) + lc(total - col1, row1 - k) - lc(total, row1);
}

}  // namespace

TestResult welch_t_test(const std::vector<double>& a,
                        const std::vector<double>& b) {
  TestResult result;
  result.test = "welch_t";
  if (a.size() < 2 || b.size() < 2)
    return untestable(result.test, "need at least 2 observations per side");
  double va = sample_variance(a) / static_cast<double>(a.size());
  double vb = sample_variance(b) / static_cast<double>(b.size());
  if (va + vb == 0.0)
    return untestable(result.test, "zero variance on both sides");
  double t = (mean(a) - mean(b)) / std::sqrt(va + vb);
  double df = (va + vb) * (va + vb) /
              (va * va / static_cast<double>(a.size() - 1) +
               vb * vb / static_cast<double>(b.size() - 1));
  boost::math::students_t_distribution<double> dist(df);
  result.statistic = t;
  result.p_value = 2.0 * boost::math::cdf(dist, -std::fabs(t));
  result.differs = result.p_value < kAlpha;
  return result;
}

TestResult mann_whitney_u(const std::vector<double>& a,
                          const std::vector<double>& b) {
  TestResult result;
  result.test = "mann_whitney_u";
  if (a.empty() || b.empty())
    return untestable(result.test, "empty sample");
  double n1 = static_cast<double>(a.size());
  double n2 = static_cast<double>(b.size());

  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<double> ranks = average_ranks(pooled);
  double r1 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r1 += ranks[i];
  double u = r1 - n1 * (n1 + 1.0) / 2.0;

  // Tie correction over pooled tie groups.
  std::sort(pooled.begin(), pooled.end());
  double tie_sum = 0.0;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j + 1 < pooled.size() && pooled[j + 1] == pooled[i]) ++j;
    double t = static_cast<double>(j - i + 1);
    tie_sum += t * t * t - t;
    i = j + 1;
  }
  double n = n1 + n2;
  double var = n1 * n2 / 12.0 * ((n + 1.0) - tie_sum / (n * (n - 1.0)));
  if (var <= 0.0)
    return untestable(result.test, "all pooled values tied");
  double z = (u - n1 * n2 / 2.0) / std::sqrt(var);
  result.statistic = u;
  result.p_value = 2.0 * (1.0 - normal_cdf(std::fabs(z)));
  result.differs = result.p_value < kAlpha;
  return result;
}

TestResult fisher_exact(std::size_t a, std::size_t b, std::size_t c,
                        std::size_t d) {
  TestResult result;
  result.test = "fisher_exact";
  std::size_t row1 = a + b;
  std::size_t col1 = a + c;
  std::size_t total = a + b + c + d;
  if (total == 0) return untestable(result.test, "empty table");
  if (row1 == 0 || row1 == total || col1 == 0 || col1 == total) {
    // A degenerate margin admits exactly one table.
    result.statistic = static_cast<double>(a);
    result.p_value = 1.0;
    return result;
  }

  std::size_t k_min = col1 > total - row1 ? col1 - (total - row1) : 0;
  std::size_t k_max = std::min(row1, col1);
  double log_obs = hypergeom_log_pmf(a, row1, col1, total);
  double p = 0.0;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    double lp = hypergeom_log_pmf(k, row1, col1, total);
    if (lp <= log_obs + std::log1p(1e-7)) p += std::exp(lp);
  }
  result.statistic = static_cast<double>(a);
  result.p_value = std::min(p, 1.0);
  result.differs = result.p_value < kAlpha;
  return result;
}

TestResult chi_square_test(const std::vector<std::size_t>& counts_a,
                           const std::vector<std::size_t>& counts_b) {
  TestResult result;
  result.test = "chi_square";
  if (counts_a.size() != counts_b.size() || counts_a.empty())
    return untestable(result.test, "mismatched category counts");

  double total_a = 0.0, total_b = 0.0;
  std::size_t k_eff = 0;
  for (std::size_t k = 0; k < counts_a.size(); ++k) {
    total_a += static_cast<double>(counts_a[k]);
    total_b += static_cast<double>(counts_b[k]);
    if (counts_a[k] + counts_b[k] > 0) ++k_eff;
  }
  double total = total_a + total_b;
  if (total_a == 0.0 || total_b == 0.0 || k_eff < 2)
    return untestable(result.test, "insufficient cells");

  double chi2 = 0.0;
  for (std::size_t k = 0; k < counts_a.size(); ++k) {
    double col = static_cast<double>(counts_a[k] + counts_b[k]);
    if (col == 0.0) continue;
    double ea = total_a * col / total;
    double eb = total_b * col / total;
    double da = static_cast<double>(counts_a[k]) - ea;
    double db = static_cast<double>(counts_b[k]) - eb;
    chi2 += da * da / ea + db * db / eb;
  }
  double df = static_cast<double>(k_eff - 1);
  boost::math::chi_squared_distribution<double> dist(df);
  result.statistic = chi2;
  result.p_value = 1.0 - boost::math::cdf(dist, chi2);
  result.differs = result.p_value < kAlpha;
  return result;
}

std::vector<ColumnTests> significance_battery(const DataTable& real,
                                              const DataTable& synth) {
  if (!schemas_compatible(real.schema(), synth.schema()))
    throw Error("significance_battery: schema mismatch");
  const DatasetSchema& schema = real.schema();
  std::vector<ColumnTests> out;

  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    const ColumnSpec& spec = schema.column(c);
    ColumnTests column{spec.name, {}};
    if (spec.is_continuous()) {
      std::vector<double> a = real.observed(c);
      std::vector<double> b = synth.observed(c);
      column.tests.push_back(welch_t_test(a, b));
      column.tests.push_back(mann_whitney_u(a, b));
    } else {
      std::vector<std::size_t> ca(spec.n_categories(), 0);
      std::vector<std::size_t> cb(spec.n_categories(), 0);
      for (std::size_t r = 0; r < real.n_rows(); ++r)
        if (!real.is_missing(c, r))
          ++ca[static_cast<std::size_t>(real.value(c, r))];
      for (std::size_t r = 0; r < synth.n_rows(); ++r)
        if (!synth.is_missing(c, r))
          ++cb[static_cast<std::size_t>(synth.value(c, r))];
      if (spec.kind == ColumnKind::kBinary)
        column.tests.push_back(fisher_exact(ca[0], ca[1], cb[0], cb[1]));
      else
        column.tests.push_back(chi_square_test(ca, cb));
    }
    out.push_back(std::move(column));
  }
  return out;
}

}  // namespace survaudit::fidelity
