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

#include "survaudit/harness/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "survaudit/util/rng.hpp"

namespace survaudit::harness {

std::vector<std::size_t> SplitPlan::train_valid() const {
  std::vector<std::size_t> out = train;
  out.insert(out.end(), valid.begin(), valid.end());
  return out;
}

SplitPlan stratified_split(const DataTable& table, std::uint64_t seed) {
  if (table.n_rows() < 10)
    throw Error("stratified_split: need at least 10 rows");
  std::size_t event_col = table.schema().event_index();

  SplitPlan plan;
  plan.seed = seed;
  Rng rng = Rng(seed).stream("split");

  // Strata over event codes, ascending.
  std::size_t n_codes = table.schema().column(event_col).n_categories();
  for (std::size_t code = 0; code < n_codes; ++code) {
    std::vector<std::size_t> stratum;
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(event_col, r))
        throw Error("stratified_split: missing event at row " +
                    std::to_string(r));
      if (table.value(event_col, r) == static_cast<double>(code))
        stratum.push_back(r);
    }
    if (stratum.empty()) continue;
    rng.shuffle(stratum);

    // Largest-remainder allocation across (train, valid, test).
    std::array<double, 3> fractions{plan.train_fraction, plan.valid_fraction,
                                    plan.test_fraction};
    std::array<std::size_t, 3> counts{};
    std::array<double, 3> remainders{};
    std::size_t assigned = 0;
    for (std::size_t part = 0; part < 3; ++part) {
      double target = fractions[part] * static_cast<double>(stratum.size());
      counts[part] = static_cast<std::size_t>(std::floor(target));
      remainders[part] = target - std::floor(target);
      assigned += counts[part];
    }
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                     std::size_t b) {
      return remainders[a] > remainders[b];
    });
    for (std::size_t k = 0; assigned < stratum.size(); ++k, ++assigned)
      ++counts[order[k % 3]];

    std::size_t pos = 0;
    for (std::size_t i = 0; i < counts[0]; ++i) plan.train.push_back(stratum[pos++]);
    for (std::size_t i = 0; i < counts[1]; ++i) plan.valid.push_back(stratum[pos++]);
    for (std::size_t i = 0; i < counts[2]; ++i) plan.test.push_back(stratum[pos++]);
  }

  std::sort(plan.train.begin(), plan.train.end());
  std::sort(plan.valid.begin(), plan.valid.end());
  std::sort(plan.test.begin(), plan.test.end());
  return plan;
}

}  // namespace survaudit::harness
