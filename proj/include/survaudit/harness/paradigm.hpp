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

#ifndef SURVAUDIT_HARNESS_PARADIGM_HPP
#define SURVAUDIT_HARNESS_PARADIGM_HPP

#include <cstdint>
#include <string>

#include "survaudit/harness/grid.hpp"
#include "survaudit/impute/impute.hpp"

namespace survaudit::harness {

/// Train/test source combinations: TRTR real/real, TSTR synthetic/real,
/// TRTS real/synthetic, TSTS synthetic/synthetic.
enum class Paradigm { kTRTR, kTSTR, kTRTS, kTSTS };

std::string to_string(Paradigm paradigm);
bool trains_on_synthetic(Paradigm paradigm);
bool tests_on_synthetic(Paradigm paradigm);

struct ParadigmResult {
  double c_index = 0.0;
  double ibs = 0.0;
  bool ibs_weights_capped = false;
  std::string chosen;          // selected hyperparameters
  double validation_c = 0.0;   // grid-search objective at the choice
};

/// Full evaluation cell: per-source stratified splits with the same seed,
/// imputer fitted on the training source's train+valid and applied to the
/// testing source's test split, grid search on the validation split, final
/// refit on train+valid (z-scored with its own statistics), C-index and
/// IPCW integrated Brier score on the test split. The censoring
/// distribution for the Brier weights comes from the training split of the
/// same paradigm.
ParadigmResult run_paradigm(const DataTable& real, const DataTable& synth,
                            Paradigm paradigm, ModelFamily family,
                            impute::ImputeMethod impute_method,
                            std::uint64_t seed);

}  // namespace survaudit::harness

#endif  // SURVAUDIT_HARNESS_PARADIGM_HPP
