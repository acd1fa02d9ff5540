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

#include "survaudit/generate/copula.hpp"

#include <algorithm>
#include <cmath>

#include "survaudit/util/rng.hpp"
#include "survaudit/util/stats.hpp"

namespace survaudit::gen {

namespace {

constexpr double kEigenFloor = 1e-8;

// Per-column normal scores over observed cells; missing cells are NaN.
std::vector<double> normal_scores(const DataTable& table, std::size_t col) {
  std::vector<double> observed = table.observed(col);
  std::size_t n_obs = observed.size();
  if (n_obs == 0)
    throw Error("fit_copula: column '" + table.schema().column(col).name +
                "' is fully missing");
  std::vector<double> ranks = average_ranks(observed);
  std::vector<double> out(table.n_rows(),
                          std::numeric_limits<double>::quiet_NaN());
  std::size_t k = 0;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.is_missing(col, r)) continue;
    double u = (ranks[k] - 0.5) / static_cast<double>(n_obs);
    out[r] = normal_quantile(u);
    ++k;
  }
  return out;
}

}  // namespace

CopulaModel fit_copula(const DataTable& table, std::uint64_t seed) {
  const DatasetSchema& schema = table.schema();
  std::size_t p = schema.n_columns();
  CopulaModel model;
  model.schema = table.schema_ptr();
  model.seed = seed;
  model.marginals.resize(p);
  model.missing_rate.resize(p);

  std::vector<std::vector<double>> scores(p);
  for (std::size_t c = 0; c < p; ++c) {
    std::vector<double> obs = table.observed(c);
    if (obs.empty())
      throw Error("fit_copula: column '" + schema.column(c).name +
                  "' is fully missing");
    model.missing_rate[c] =
        static_cast<double>(table.n_missing(c)) /
        static_cast<double>(table.n_rows());
    if (schema.column(c).is_continuous()) {
      std::sort(obs.begin(), obs.end());
      model.marginals[c] = std::move(obs);
    } else {
      std::vector<double> cum(schema.column(c).n_categories(), 0.0);
      for (double v : obs) cum[static_cast<std::size_t>(v)] += 1.0;
      double total = static_cast<double>(obs.size());
      double running = 0.0;
      for (double& f : cum) {
        running += f / total;
        f = running;
      }
      cum.back() = 1.0;
      model.marginals[c] = std::move(cum);
    }
    scores[c] = normal_scores(table, c);
  }

  // Pairwise-complete Pearson over the normal scores.
  Eigen::MatrixXd corr = Eigen::MatrixXd::Identity(p, p);
  std::vector<double> x, y;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      x.clear();
      y.clear();
      for (std::size_t r = 0; r < table.n_rows(); ++r) {
        if (std::isnan(scores[i][r]) || std::isnan(scores[j][r])) continue;
        x.push_back(scores[i][r]);
        y.push_back(scores[j][r]);
      }
      double rho = 0.0;
      pearson(x, y, rho);  // leaves 0 when degenerate
      corr(i, j) = rho;
      corr(j, i) = rho;
    }
  }

  // PSD repair: clip eigenvalues, rebuild, renormalize the diagonal.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(corr);
  Eigen::VectorXd values = eig.eigenvalues().cwiseMax(kEigenFloor);
  Eigen::MatrixXd repaired =
      eig.eigenvectors() * values.asDiagonal() * eig.eigenvectors().transpose();
  Eigen::VectorXd d = repaired.diagonal().cwiseSqrt();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) repaired(i, j) /= d[i] * d[j];
  model.latent_corr = repaired;

  Eigen::LLT<Eigen::MatrixXd> llt(repaired);
  double jitter = kEigenFloor;
  while (llt.info() != Eigen::Success && jitter < 1e-2) {
    Eigen::MatrixXd bumped = repaired;
    bumped.diagonal().array() += jitter;
    llt.compute(bumped);
    jitter *= 10.0;
  }
  if (llt.info() != Eigen::Success)
    throw Error("fit_copula: correlation matrix could not be factorized");
  model.chol = llt.matrixL();
  return model;
}

DataTable sample_copula(const CopulaModel& model, std::size_t n,
                        bool with_missingness) {
  const DatasetSchema& schema = *model.schema;
  std::size_t p = schema.n_columns();
  DataTable out(model.schema, n);

  Rng value_rng = Rng(model.seed).stream("copula_sample");
  Rng mask_rng = Rng(model.seed).stream("copula_mask");

  Eigen::VectorXd g(p);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < p; ++c) g[c] = value_rng.normal();
    Eigen::VectorXd z = model.chol * g;
    for (std::size_t c = 0; c < p; ++c) {
      double u = normal_cdf(z[c]);
      const std::vector<double>& marginal = model.marginals[c];
      double v;
      if (schema.column(c).is_continuous()) {
        v = quantile_sorted(marginal, u);
      } else {
        std::size_t code = 0;
        while (code + 1 < marginal.size() && u > marginal[code]) ++code;
        v = static_cast<double>(code);
      }
      out.set(c, r, v);
    }
  }
  if (with_missingness) {
    for (std::size_t c = 0; c < p; ++c) {
      if (model.missing_rate[c] <= 0.0) continue;
      for (std::size_t r = 0; r < n; ++r)
        if (mask_rng.bernoulli(model.missing_rate[c])) out.set_missing(c, r);
    }
  }
  return out;
}

}  // namespace survaudit::gen
