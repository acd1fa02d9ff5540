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

#include "survaudit/survival/concordance.hpp"

#include <algorithm>
#include <numeric>

#include "survaudit/core/schema.hpp"

namespace survaudit::surv {

namespace {

// Fenwick tree over 1-based ranks.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t i) {
    for (; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  std::size_t prefix(std::size_t i) const {
    std::size_t s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::size_t> tree_;
};

}  // namespace

ConcordanceCounts concordance_counts(const std::vector<double>& times,
                                     const std::vector<int>& events,
                                     const std::vector<double>& risks) {
  std::size_t n = times.size();
  if (events.size() != n || risks.size() != n)
    throw Error("c_index: input length mismatch");

  // Compress risks to 1-based ranks.
  std::vector<double> sorted_risks = risks;
  std::sort(sorted_risks.begin(), sorted_risks.end());
  sorted_risks.erase(std::unique(sorted_risks.begin(), sorted_risks.end()),
                     sorted_risks.end());
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i)
    rank[i] = static_cast<std::size_t>(
                  std::lower_bound(sorted_risks.begin(), sorted_risks.end(),
                                   risks[i]) -
                  sorted_risks.begin()) +
              1;

  // Process subjects by descending time; the tree holds risks of subjects
  // with strictly later times.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return times[a] > times[b];
  });

  Fenwick tree(sorted_risks.size());
  ConcordanceCounts counts;
  std::size_t inserted = 0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && times[order[j]] == times[order[i]]) ++j;
    for (std::size_t k = i; k < j; ++k) {
      std::size_t idx = order[k];
      if (events[idx] == 0) continue;
      std::size_t below = tree.prefix(rank[idx] - 1);
      std::size_t upto = tree.prefix(rank[idx]);
      counts.comparable += inserted;
      counts.concordant += below;
      counts.tied_risk += upto - below;
    }
    for (std::size_t k = i; k < j; ++k) tree.add(rank[order[k]]);
    inserted += j - i;
    i = j;
  }
  return counts;
}

double c_index(const std::vector<double>& times, const std::vector<int>& events,
               const std::vector<double>& risks) {
  ConcordanceCounts counts = concordance_counts(times, events, risks);
  if (counts.comparable == 0)
    throw Error("c_index: no comparable pairs");
  return (static_cast<double>(counts.concordant) +
          0.5 * static_cast<double>(counts.tied_risk)) /
         static_cast<double>(counts.comparable);
}

}  // namespace survaudit::surv
