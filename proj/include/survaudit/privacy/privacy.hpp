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

#ifndef SURVAUDIT_PRIVACY_PRIVACY_HPP
#define SURVAUDIT_PRIVACY_PRIVACY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "survaudit/core/table.hpp"

namespace survaudit::privacy {

/// All table columns as one numeric matrix (category codes as-is), for
/// distance-based attacks.
Eigen::MatrixXd to_matrix(const DataTable& table);

struct ExactMatchResult {
  double rate = 0.0;  // matched synthetic rows / synthetic rows
  std::vector<std::pair<std::size_t, std::size_t>> matches;  // (synth, real)
};

/// A synthetic row matches a real row when every categorical value is equal
/// and every numeric value is within `rel_tol` relative difference (a real
/// value of 0 requires an exact 0). Missing compares equal only to missing.
ExactMatchResult exact_match(const DataTable& real, const DataTable& synth,
                             double rel_tol = 0.05);

struct MiaResult {
  double accuracy = 0.0;  // mean over folds; 0.5 is ideal privacy
  std::vector<double> fold_accuracy;
};

/// Distance-based membership inference: per fold, members are subsampled
/// from `train` to the size of `test`, both are classified by whether their
/// 1-NN distance to the synthetic data falls below the median of the pooled
/// distances (strictly). Min-max normalization is fitted on train+synth
/// combined. Requires |test| <= |train| and complete tables.
MiaResult mia_accuracy(const DataTable& train, const DataTable& test,
                       const DataTable& synth, std::size_t folds = 4,
                       std::uint64_t seed = 0);

struct AiaTargetDetail {
  std::string target;
  double linear_accuracy = 0.0;
  double knn_accuracy = 0.0;
  double linear_baseline = 0.0;
  double knn_baseline = 0.0;
  bool degenerate = false;  // constant target in the attacker training data
};

struct AiaResult {
  double linear_score = 0.0;
  double knn_score = 0.0;
  double linear_baseline = 0.0;  // same attackers scored on held-out test
  double knn_baseline = 0.0;
  std::vector<AiaTargetDetail> detail;
};

/// Attribute inference: every non-quasi-identifier feature column is a
/// sensitive target, predicted from all remaining columns by attackers
/// trained on the synthetic data (ridge/logistic, and a distance-weighted
/// k-NN with k=5 standing in for a boosted-tree attacker). Accuracy is
/// exact-label for categorical targets and 5% relative for continuous ones,
/// averaged over folds and targets.
AiaResult aia_scores(const DataTable& train, const DataTable& test,
                     const DataTable& synth, std::size_t folds = 5,
                     std::uint64_t seed = 0);

struct NnaaResult {
  double nnaa_train_synth = 0.0;
  double nnaa_test_synth = 0.0;
  double privacy_loss = 0.0;  // nnaa_test_synth - nnaa_train_synth, exactly
};

/// Nearest-neighbor adversarial accuracy with self-exclusion inside a set
/// and strict-inequality indicators; unequal sizes are balanced by
/// subsampling the larger set, averaged over `iterations`.
NnaaResult nnaa(const DataTable& train, const DataTable& test,
                const DataTable& synth, std::size_t iterations = 30,
                std::uint64_t seed = 0);

/// The symmetric adversarial accuracy between two row sets (already
/// normalized); exposed for direct testing.
double nnaa_pair(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q,
                 std::size_t iterations, std::uint64_t seed);

}  // namespace survaudit::privacy

#endif  // SURVAUDIT_PRIVACY_PRIVACY_HPP
