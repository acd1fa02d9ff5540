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

#ifndef SURVAUDIT_SURVIVAL_COX_HPP
#define SURVAUDIT_SURVIVAL_COX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "survaudit/survival/survival_data.hpp"

namespace survaudit::surv {

/// Efron-tie-corrected log partial likelihood with per-observation
/// derivatives in the linear predictor eta.
struct PartialLikelihood {
  double loglik = 0.0;
  Eigen::VectorXd d_eta;       // d loglik / d eta_i
  Eigen::VectorXd neg_d2_eta;  // -d^2 loglik / d eta_i^2 (diagonal), >= 0
};

PartialLikelihood efron_loglik(const std::vector<double>& times,
                               const std::vector<int>& events,
                               const Eigen::VectorXd& eta,
                               bool need_derivatives = true);

/// Analytic gradient of the log partial likelihood with respect to beta.
Eigen::VectorXd cox_gradient(const SurvivalData& data,
                             const Eigen::VectorXd& beta);

/// Elastic-net penalized Cox model. The objective minimized is
///   -(1/n) loglik + penalty * (l1_ratio*|beta|_1 + (1-l1_ratio)/2*|beta|_2^2)
/// via cyclic coordinate descent on the IRLS quadratic approximation with
/// soft-thresholding; backtracking keeps the objective non-increasing.
struct CoxModel {
  Eigen::VectorXd beta;
  double penalty = 0.0;
  double l1_ratio = 0.0;
  std::vector<std::string> feature_names;

  // Breslow baseline cumulative hazard on training event times.
  std::vector<double> baseline_times;
  std::vector<double> baseline_cumhaz;

  bool converged = false;
  std::size_t cycles = 0;
  std::vector<double> objective_path;  // penalized objective per cycle

  double baseline_at(double t) const;
};

/// Features must be z-scored by the caller; requires >= 1 event.
CoxModel fit_cox(const SurvivalData& data, double penalty, double l1_ratio,
                 std::uint64_t seed = 0);

/// Risk score = linear predictor beta' x.
Eigen::VectorXd cox_risk(const CoxModel& model, const Eigen::MatrixXd& X);

/// S(t|x) = exp(-H0(t) * exp(beta' x)) on the given grid; n x grid matrix.
Eigen::MatrixXd cox_survival(const CoxModel& model, const Eigen::MatrixXd& X,
                             const std::vector<double>& grid);

/// Unpenalized single-covariate fit with Wald statistics.
struct UnivariateCox {
  double beta = 0.0;
  double se = 0.0;
  double p_value = 1.0;
  int sign = 0;
  bool estimable = false;
};

UnivariateCox cox_univariate(const SurvivalData& data, std::size_t feature);

}  // namespace survaudit::surv

#endif  // SURVAUDIT_SURVIVAL_COX_HPP
