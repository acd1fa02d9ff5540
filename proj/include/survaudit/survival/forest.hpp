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

#ifndef SURVAUDIT_SURVIVAL_FOREST_HPP
#define SURVAUDIT_SURVIVAL_FOREST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "survaudit/survival/survival_data.hpp"

namespace survaudit::surv {

struct ForestHyperparams {
  std::size_t n_estimators = 20;
  std::size_t max_depth = 5;  // 0 grows single-leaf trees
  std::size_t min_samples_split = 2;
  std::size_t min_samples_leaf = 1;
  bool bootstrap = true;
};

/// One survival tree: log-rank split nodes, leaves holding the Nelson-Aalen
/// cumulative hazard of their training samples as a sparse step function.
struct SurvivalTree {
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int leaf = -1;  // index into leaf_chf when feature == -1
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::pair<double, double>>> leaf_chf;
  std::vector<std::size_t> leaf_n;  // training rows per leaf

  double chf_at(const Eigen::Ref<const Eigen::RowVectorXd>& x,
                double t) const;
};

struct ForestModel {
  ForestHyperparams params;
  std::uint64_t seed = 0;
  std::vector<SurvivalTree> trees;
  std::vector<std::string> feature_names;
  double horizon = 0.0;  // last training event time; risk evaluation point

  std::size_t n_features() const { return feature_names.size(); }
};

/// Per tree: bootstrap sample, recursive log-rank splitting over
/// ceil(sqrt(p)) randomly chosen features with midpoint thresholds, leaves
/// subject to depth/min-sample rules. Same seed, same forest, bit for bit.
ForestModel fit_rsf(const SurvivalData& data, const ForestHyperparams& params,
                    std::uint64_t seed);

/// Risk score: ensemble cumulative hazard at the training horizon.
Eigen::VectorXd rsf_risk(const ForestModel& model, const Eigen::MatrixXd& X);

/// S(t|x) = exp(-mean tree CHF(t|x)); n x grid matrix.
Eigen::MatrixXd rsf_survival(const ForestModel& model,
                             const Eigen::MatrixXd& X,
                             const std::vector<double>& grid);

}  // namespace survaudit::surv

#endif  // SURVAUDIT_SURVIVAL_FOREST_HPP
