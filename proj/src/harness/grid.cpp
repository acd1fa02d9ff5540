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

#include "survaudit/harness/grid.hpp"

#include "survaudit/survival/concordance.hpp"
#include "survaudit/survival/cox.hpp"
#include "survaudit/util/rng.hpp"

namespace survaudit::harness {

std::string to_string(ModelFamily family) {
  return family == ModelFamily::kCox ? "cox" : "rsf";
}

std::vector<CoxCandidate> cox_grid() {
  std::vector<CoxCandidate> grid;
  for (double l1 : {0.0, 0.5, 1.0})
    for (double penalty : {0.1, 1.0}) grid.push_back({l1, penalty});
  return grid;
}

std::vector<surv::ForestHyperparams> rsf_grid() {
  std::vector<surv::ForestHyperparams> grid;
  for (std::size_t n : {5, 20, 50})
    for (std::size_t depth : {2, 5, 10})
      for (std::size_t split : {2, 5, 10})
        for (std::size_t leaf : {1, 2, 4}) {
          surv::ForestHyperparams params;
          params.n_estimators = n;
          params.max_depth = depth;
          params.min_samples_split = split;
          params.min_samples_leaf = leaf;
          grid.push_back(params);
        }
  return grid;
}

GridChoice grid_search(const surv::SurvivalData& train,
                       const surv::SurvivalData& valid, ModelFamily family,
                       std::uint64_t seed) {
  surv::FeatureScaler scaler = surv::fit_feature_scaler(train.features);
  surv::SurvivalData train_s = train;
  train_s.features = surv::apply_feature_scaler(scaler, train.features);
  Eigen::MatrixXd valid_x = surv::apply_feature_scaler(scaler, valid.features);

  GridChoice choice;
  bool any = false;
  double best = 0.0;
  Rng rng(seed);

  auto consider = [&](std::size_t index, double c, const std::string& desc) {
    if (!any || c > best) {
      any = true;
      best = c;
      choice.index = index;
      choice.validation_c_index = c;
      choice.description = desc;
    }
  };

  if (family == ModelFamily::kCox) {
    std::vector<CoxCandidate> grid = cox_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      try {
        surv::CoxModel model =
            surv::fit_cox(train_s, grid[i].penalty, grid[i].l1_ratio);
        Eigen::VectorXd risks = surv::cox_risk(model, valid_x);
        std::vector<double> r(risks.data(), risks.data() + risks.size());
        double c = surv::c_index(valid.times, valid.events, r);
        consider(i, c,
                 "cox(l1_ratio=" + std::to_string(grid[i].l1_ratio) +
                     ",penalty=" + std::to_string(grid[i].penalty) + ")");
      } catch (const Error&) {
        ++choice.n_failed;
      }
    }
  } else {
    std::vector<surv::ForestHyperparams> grid = rsf_grid();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      try {
        surv::ForestModel model = surv::fit_rsf(
            train_s, grid[i], rng.stream("grid_rsf", i).root_seed());
        Eigen::VectorXd risks = surv::rsf_risk(model, valid_x);
        std::vector<double> r(risks.data(), risks.data() + risks.size());
        double c = surv::c_index(valid.times, valid.events, r);
        consider(i, c,
                 "rsf(n=" + std::to_string(grid[i].n_estimators) +
                     ",depth=" + std::to_string(grid[i].max_depth) +
                     ",min_split=" + std::to_string(grid[i].min_samples_split) +
                     ",min_leaf=" + std::to_string(grid[i].min_samples_leaf) +
                     ")");
      } catch (const Error&) {
        ++choice.n_failed;
      }
    }
  }
  if (!any) throw Error("grid_search: every candidate fit failed");
  return choice;
}

}  // namespace survaudit::harness
