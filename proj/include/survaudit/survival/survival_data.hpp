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

#ifndef SURVAUDIT_SURVIVAL_SURVIVAL_DATA_HPP
#define SURVAUDIT_SURVIVAL_SURVIVAL_DATA_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "survaudit/core/table.hpp"

namespace survaudit::surv {

/// Model-facing view of a complete table: positive times, 0/1 events, and a
/// numeric feature matrix with multi-category columns one-hot expanded
/// (reference level dropped).
struct SurvivalData {
  std::vector<double> times;
  std::vector<int> events;
  Eigen::MatrixXd features;  // n x p
  std::vector<std::string> feature_names;

  std::size_t n() const { return times.size(); }
  std::size_t n_features() const {
    return static_cast<std::size_t>(features.cols());
  }
  std::size_t n_events() const;
};

/// Throws if the table has missing cells, non-positive times, or invalid
/// event codes.
SurvivalData to_survival_data(const DataTable& table);

/// Column-wise z-scoring of the feature matrix (population sd; degenerate
/// columns map to 0). Stats from `fit`, applied to both.
struct FeatureScaler {
  Eigen::VectorXd mean;
  Eigen::VectorXd sd;  // 0 marks a degenerate column
};

FeatureScaler fit_feature_scaler(const Eigen::MatrixXd& X);
Eigen::MatrixXd apply_feature_scaler(const FeatureScaler& scaler,
                                     const Eigen::MatrixXd& X);

}  // namespace survaudit::surv

#endif  // SURVAUDIT_SURVIVAL_SURVIVAL_DATA_HPP
