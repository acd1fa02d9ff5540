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

#ifndef SURVAUDIT_FIDELITY_SIGNIFICANCE_HPP
#define SURVAUDIT_FIDELITY_SIGNIFICANCE_HPP

#include <string>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit::fidelity {

struct TestResult {
  std::string test;  // "welch_t", "mann_whitney_u", "fisher_exact", "chi_square"
  double statistic = 0.0;
  double p_value = 1.0;
  bool differs = false;  // p < 0.05
  bool testable = true;
  std::string note;
};

/// Welch's unequal-variance t-test with Welch-Satterthwaite degrees of
/// freedom; two-sided.
TestResult welch_t_test(const std::vector<double>& a,
                        const std::vector<double>& b);

/// Mann-Whitney U with the tie-corrected normal approximation (no
/// continuity correction); two-sided.
TestResult mann_whitney_u(const std::vector<double>& a,
                          const std::vector<double>& b);

/// Two-sided Fisher exact test of the 2x2 table [[a, b], [c, d]]: sums the
/// hypergeometric probabilities of all tables with the same margins that
/// are no more likely than the observed one (relative slack 1e-7).
TestResult fisher_exact(std::size_t a, std::size_t b, std::size_t c,
                        std::size_t d);

/// Pearson chi-square on a 2 x k contingency table (categories with a zero
/// margin are dropped).
TestResult chi_square_test(const std::vector<std::size_t>& counts_a,
                           const std::vector<std::size_t>& counts_b);

struct ColumnTests {
  std::string column;
  std::vector<TestResult> tests;
};

/// Per-column battery over observed (pre-imputation) cells: continuous
/// columns report both Welch and Mann-Whitney, binary columns Fisher exact,
/// multi-category columns chi-square.
std::vector<ColumnTests> significance_battery(const DataTable& real,
                                              const DataTable& synth);

}  // namespace survaudit::fidelity

#endif  // SURVAUDIT_FIDELITY_SIGNIFICANCE_HPP
