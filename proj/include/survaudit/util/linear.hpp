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

#ifndef SURVAUDIT_UTIL_LINEAR_HPP
#define SURVAUDIT_UTIL_LINEAR_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace survaudit {

/// Least squares via the normal equations; falls back to a ridge-stabilized
/// solve (additive 1e-6 on the diagonal) when the plain solve is singular.
/// The last design column is expected to be the intercept.
Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& X,
                                    const Eigen::VectorXd& y);

/// Ridge regression with an explicit penalty on all non-intercept columns.
Eigen::VectorXd solve_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                            double lambda);

/// One-vs-rest L2-regularized logistic (IRLS, unpenalized intercept).
/// Returns one logit weight row per class; classes unseen in y get an
/// effectively minus-infinite intercept. `lambda` is the total ridge weight.
Eigen::MatrixXd fit_logistic_ovr(const Eigen::MatrixXd& X,
                                 const std::vector<std::size_t>& y,
                                 std::size_t n_classes, double lambda);

}  // namespace survaudit

#endif  // SURVAUDIT_UTIL_LINEAR_HPP
