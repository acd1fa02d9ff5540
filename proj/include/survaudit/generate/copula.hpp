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

#ifndef SURVAUDIT_GENERATE_COPULA_HPP
#define SURVAUDIT_GENERATE_COPULA_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "survaudit/core/table.hpp"

namespace survaudit::gen {

/// Gaussian copula over empirical marginals: the in-repo baseline generator
/// used for end-to-end self-tests of the audit pipeline.
struct CopulaModel {
  SchemaPtr schema;
  // Continuous columns: sorted observed sample. Categorical/binary columns:
  // cumulative category frequencies (last entry 1).
  std::vector<std::vector<double>> marginals;
  Eigen::MatrixXd latent_corr;  // PSD-repaired, unit diagonal
  Eigen::MatrixXd chol;         // lower Cholesky factor
  std::vector<double> missing_rate;
  std::uint64_t seed = 0;
};

/// Normal scores via the rank transform Phi^-1((rank - 0.5)/n) (average
/// ranks for ties), latent correlation as pairwise-complete Pearson over
/// the scores, eigenvalue clipping at 1e-8 for positive semidefiniteness.
CopulaModel fit_copula(const DataTable& table, std::uint64_t seed);

/// Draws latent multivariate normals through the Cholesky factor and
/// inverts each marginal (linear interpolation of the empirical quantile
/// function; cumulative-frequency partition for categories). When
/// `with_missingness` is set, each cell is masked independently with the
/// column's recorded missing rate. Pure function of (model, n, flag).
DataTable sample_copula(const CopulaModel& model, std::size_t n,
                        bool with_missingness);

}  // namespace survaudit::gen

#endif  // SURVAUDIT_GENERATE_COPULA_HPP
