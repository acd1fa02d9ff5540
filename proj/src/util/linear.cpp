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

#include "survaudit/util/linear.hpp"

#include <cmath>

namespace survaudit {

Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& X,
                                    const Eigen::VectorXd& y) {
  Eigen::MatrixXd xtx = X.transpose() * X;
  Eigen::VectorXd xty = X.transpose() * y;
  Eigen::VectorXd beta = xtx.ldlt().solve(xty);
  double residual = (xtx * beta - xty).norm();
  double scale = xty.norm() + 1.0;
  if (!beta.allFinite() || residual > 1e-6 * scale) {
    Eigen::MatrixXd ridge = xtx;
    ridge.diagonal().array() += 1e-6;
    beta = ridge.ldlt().solve(xty);
  }
  return beta;
}

Eigen::VectorXd solve_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                            double lambda) {
  Eigen::MatrixXd xtx = X.transpose() * X;
  xtx.diagonal().head(X.cols() - 1).array() += lambda;
  return xtx.ldlt().solve(X.transpose() * y);
}

Eigen::MatrixXd fit_logistic_ovr(const Eigen::MatrixXd& X,
                                 const std::vector<std::size_t>& y,
                                 std::size_t n_classes, double lambda) {
  const auto n = static_cast<std::size_t>(X.rows());
  const auto p = static_cast<std::size_t>(X.cols());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_classes, p);

  for (std::size_t cls = 0; cls < n_classes; ++cls) {
    std::size_t count = 0;
    Eigen::VectorXd target(n);
    for (std::size_t i = 0; i < n; ++i) {
      target[i] = (y[i] == cls) ? 1.0 : 0.0;
      count += (y[i] == cls);
    }
    if (count == 0) {
      out(cls, p - 1) = -1e30;
      continue;
    }
    if (count == n) {
      out(cls, p - 1) = 1e30;
      continue;
    }
    Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
    for (int iter = 0; iter < 25; ++iter) {
      Eigen::VectorXd eta = X * w;
      Eigen::VectorXd prob =
          eta.unaryExpr([](double e) { return 1.0 / (1.0 + std::exp(-e)); });
      Eigen::VectorXd grad = X.transpose() * (prob - target);
      grad.head(p - 1) += lambda * w.head(p - 1);
      if (grad.norm() < 1e-8 * static_cast<double>(n)) break;
      Eigen::VectorXd wt = prob.array() * (1.0 - prob.array()) + 1e-10;
      Eigen::MatrixXd hess = X.transpose() * wt.asDiagonal() * X;
      hess.diagonal().head(p - 1).array() += lambda;
      Eigen::VectorXd step = hess.ldlt().solve(grad);
      if (!step.allFinite()) break;
      w -= step;
    }
    out.row(cls) = w.transpose();
  }
  return out;
}

}  // namespace survaudit
