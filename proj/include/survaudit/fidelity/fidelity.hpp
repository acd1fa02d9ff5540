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

#ifndef SURVAUDIT_FIDELITY_FIDELITY_HPP
#define SURVAUDIT_FIDELITY_FIDELITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "survaudit/core/table.hpp"

namespace survaudit::fidelity {

/// 1 minus the mean absolute per-category frequency difference; frequencies
/// over non-missing cells.
double dimwise_categorical(const DataTable& real, const DataTable& synth,
                           std::size_t col);

/// 1 minus the two-sample Kolmogorov-Smirnov statistic.
double dimwise_continuous(const DataTable& real, const DataTable& synth,
                          std::size_t col);

struct PairScore {
  std::string column_i;
  std::string column_j;
  double score = 0.0;
  bool skipped = false;
  std::string reason;  // set when skipped
};

/// 1 - |S - R| / 2 over Pearson correlations computed on pairwise-complete
/// cells of each table. Zero variance on either side skips the pair.
PairScore corr_score_continuous(const DataTable& real, const DataTable& synth,
                                std::size_t col_i, std::size_t col_j);

/// Total-variation similarity of the normalized joint contingency tables:
/// 1 - 0.5 * sum |S_xy - R_xy|.
PairScore corr_score_categorical(const DataTable& real, const DataTable& synth,
                                 std::size_t col_i, std::size_t col_j);

struct ColumnScore {
  std::string column;
  double score = 0.0;
};

/// Per-column dimension-wise scores plus all same-kind column pairs
/// (continuous-continuous and categorical-categorical; mixed pairs are not
/// defined and are skipped). Aggregates are arithmetic means of the
/// non-skipped items.
struct FidelityScores {
  std::vector<ColumnScore> dimension_wise;
  double dimension_wise_mean = 0.0;
  std::vector<PairScore> correlation;
  double correlation_mean = 0.0;
};

FidelityScores fidelity_scores(const DataTable& real, const DataTable& synth);

}  // namespace survaudit::fidelity

#endif  // SURVAUDIT_FIDELITY_FIDELITY_HPP
