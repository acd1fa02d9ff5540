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

#ifndef SURVAUDIT_IMPUTE_IMPUTE_HPP
#define SURVAUDIT_IMPUTE_IMPUTE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "survaudit/core/table.hpp"

namespace survaudit::impute {

enum class ImputeMethod { kMedian, kChained };

ImputeMethod parse_method(const std::string& name);
std::string to_string(ImputeMethod method);

struct ImputeConfig {
  ImputeMethod method = ImputeMethod::kChained;
  std::size_t max_iterations = 100;
  // Stopping rule on the mean absolute change of imputed continuous cells,
  // measured on the z-score scale of each column's observed values.
  double convergence_tol = 1e-3;
  std::uint64_t seed = 0;

  void check() const {
    if (max_iterations < 1) throw Error("impute: max_iterations must be >= 1");
    if (!(convergence_tol > 0.0)) throw Error("impute: tol must be > 0");
  }
};

/// Continuous missing cells get the column median of observed values;
/// categorical/binary cells get the mode (ties resolved to the lowest
/// code). Throws on a fully-missing column.
DataTable impute_median(const DataTable& table);

struct ChainedResult {
  DataTable table;
  bool converged = false;
  std::size_t iterations = 0;
  // Imputed categorical cells that changed class in the last cycle; churn
  // is reported but not part of the stopping rule.
  std::size_t categorical_churn = 0;
};

/// Chained-equations single imputation. Initializes with median/mode fill,
/// then cycles feature columns in schema order, regressing each column's
/// originally-missing cells on all other feature columns (least squares for
/// continuous targets, one-vs-rest regularized logistic for categorical).
/// Outcome columns (time/event) are excluded from predictors and targets;
/// if they carry missing cells those keep the median/mode fill.
/// Deterministic regression-mean imputation (no posterior noise).
ChainedResult impute_chained(const DataTable& table, const ImputeConfig& cfg);

/// Frozen imputer: per-column fill statistics plus (for the chained method)
/// the regressors from the final training cycle for every column that had
/// missing cells in the training table. Applying never refits; a target
/// column missing without a frozen regressor falls back to the training
/// median/mode.
class ImputerModel {
 public:
  struct Regressor {
    bool fitted = false;
    bool continuous = true;
    Eigen::MatrixXd coef;  // continuous: 1 x (terms+1); else classes x (terms+1)
  };

  ImputeMethod method = ImputeMethod::kMedian;
  ImputeConfig config;
  SchemaPtr schema;
  std::vector<double> fill;          // median or lowest-tie mode per column
  std::vector<Regressor> regressors;  // aligned with schema columns
};

ImputerModel fit_imputer(const DataTable& train, const ImputeConfig& cfg);
DataTable apply_imputer(const ImputerModel& model, const DataTable& other);

}  // namespace survaudit::impute

#endif  // SURVAUDIT_IMPUTE_IMPUTE_HPP
