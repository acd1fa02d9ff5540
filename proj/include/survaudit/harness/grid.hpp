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

#ifndef SURVAUDIT_HARNESS_GRID_HPP
#define SURVAUDIT_HARNESS_GRID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "survaudit/survival/forest.hpp"
#include "survaudit/survival/survival_data.hpp"

namespace survaudit::harness {

enum class ModelFamily { kCox, kRsf };

std::string to_string(ModelFamily family);

struct CoxCandidate {
  double l1_ratio = 0.0;
  double penalty = 0.0;
};

/// Fixed hyperparameter grids: Cox l1_ratio {0, 0.5, 1} x penalty {0.1, 1}
/// (6 candidates); RSF n_estimators {5, 20, 50} x max_depth {2, 5, 10} x
/// min_samples_split {2, 5, 10} x min_samples_leaf {1, 2, 4} (81
/// candidates). Enumeration order follows the listing.
std::vector<CoxCandidate> cox_grid();
std::vector<surv::ForestHyperparams> rsf_grid();

struct GridChoice {
  std::size_t index = 0;
  double validation_c_index = 0.0;
  std::string description;
  std::size_t n_failed = 0;  // candidates whose fit threw
};

/// Fits every candidate on the (internally z-scored) training data and
/// selects the one maximizing validation C-index; ties keep the earlier
/// candidate. Throws when every fit fails.
GridChoice grid_search(const surv::SurvivalData& train,
                       const surv::SurvivalData& valid, ModelFamily family,
                       std::uint64_t seed);

}  // namespace survaudit::harness

#endif  // SURVAUDIT_HARNESS_GRID_HPP
