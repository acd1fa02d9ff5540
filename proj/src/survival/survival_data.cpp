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

#include "survaudit/survival/survival_data.hpp"

#include <cmath>

namespace survaudit::surv {

std::size_t SurvivalData::n_events() const {
  std::size_t k = 0;
  for (int e : events) k += (e != 0);
  return k;
}

SurvivalData to_survival_data(const DataTable& table) {
  const DatasetSchema& schema = table.schema();
  std::size_t time_col = schema.time_index();
  std::size_t event_col = schema.event_index();

  SurvivalData data;
  data.times.reserve(table.n_rows());
  data.events.reserve(table.n_rows());
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.is_missing(time_col, r) || table.is_missing(event_col, r))
      throw Error("survival data: missing outcome at row " +
                  std::to_string(r));
    double t = table.value(time_col, r);
    double e = table.value(event_col, r);
    if (!(t > 0.0))
      throw Error("survival data: non-positive time at row " +
                  std::to_string(r));
    if (e != 0.0 && e != 1.0)
      throw Error("survival data: event must be 0/1 at row " +
                  std::to_string(r));
    data.times.push_back(t);
    data.events.push_back(static_cast<int>(e));
  }

  std::vector<std::pair<std::size_t, std::size_t>> terms;  // (col, code)
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    const ColumnSpec& spec = schema.column(c);
    if (spec.is_outcome()) continue;
    if (spec.kind == ColumnKind::kCategorical) {
      for (std::size_t k = 1; k < spec.n_categories(); ++k) {
        terms.emplace_back(c, k);
        data.feature_names.push_back(spec.name + "=" + spec.categories[k]);
      }
    } else {
      terms.emplace_back(c, 0);
      data.feature_names.push_back(spec.name);
    }
  }

  data.features.resize(table.n_rows(), terms.size());
  for (std::size_t j = 0; j < terms.size(); ++j) {
    auto [c, code] = terms[j];
    const ColumnSpec& spec = schema.column(c);
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(c, r))
        throw Error("survival data: missing cell in column '" + spec.name +
                    "' row " + std::to_string(r));
      double v = table.value(c, r);
      data.features(r, j) = spec.kind == ColumnKind::kCategorical
                                ? (v == static_cast<double>(code) ? 1.0 : 0.0)
                                : v;
    }
  }
  return data;
}

FeatureScaler fit_feature_scaler(const Eigen::MatrixXd& X) {
  FeatureScaler s;
  s.mean = X.colwise().mean();
  s.sd.resize(X.cols());
  const double n = static_cast<double>(X.rows());
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    double var = (X.col(j).array() - s.mean[j]).square().sum() / n;
    s.sd[j] = var > 0.0 ? std::sqrt(var) : 0.0;
  }
  return s;
}

Eigen::MatrixXd apply_feature_scaler(const FeatureScaler& scaler,
                                     const Eigen::MatrixXd& X) {
  Eigen::MatrixXd out = X;
  for (Eigen::Index j = 0; j < X.cols(); ++j) {
    if (scaler.sd[j] > 0.0)
      out.col(j) = (X.col(j).array() - scaler.mean[j]) / scaler.sd[j];
    else
      out.col(j).setZero();
  }
  return out;
}

}  // namespace survaudit::surv
