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

#include "survaudit/impute/impute.hpp"

#include <algorithm>
#include <cmath>

#include "survaudit/util/linear.hpp"
#include "survaudit/util/stats.hpp"

namespace survaudit::impute {

namespace {

constexpr double kLogisticRidge = 1e-3;  // per observation, non-intercept

bool is_feature(const ColumnSpec& spec) {
  return spec.role == ColumnRole::kFeature ||
         spec.role == ColumnRole::kQuasiIdentifierFeature;
}

double column_fill(const DataTable& table, std::size_t c) {
  const ColumnSpec& spec = table.schema().column(c);
  std::vector<double> obs = table.observed(c);
  if (obs.empty())
    throw Error("impute: column '" + spec.name + "' is fully missing");
  if (spec.is_continuous()) return median(obs);
  std::vector<std::size_t> counts(spec.n_categories(), 0);
  for (double v : obs) ++counts[static_cast<std::size_t>(v)];
  std::size_t best = 0;
  for (std::size_t k = 1; k < counts.size(); ++k)
    if (counts[k] > counts[best]) best = k;  // ties keep the lowest code
  return static_cast<double>(best);
}

// Predictor layout for a given target: every feature column except the
// target, one-hot expanded (reference level dropped), intercept last.
struct Design {
  std::vector<std::size_t> predictor_cols;
  std::size_t n_terms = 0;  // without intercept

  Design(const DatasetSchema& schema, std::size_t target) {
    for (std::size_t c = 0; c < schema.n_columns(); ++c) {
      if (c == target || !is_feature(schema.column(c))) continue;
      predictor_cols.push_back(c);
      const ColumnSpec& spec = schema.column(c);
      n_terms += spec.kind == ColumnKind::kCategorical
                     ? spec.n_categories() - 1
                     : 1;
    }
  }

  Eigen::MatrixXd build(const DataTable& table,
                        const std::vector<std::size_t>& rows) const {
    Eigen::MatrixXd X(rows.size(), n_terms + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t r = rows[i];
      std::size_t t = 0;
      for (std::size_t c : predictor_cols) {
        const ColumnSpec& spec = table.schema().column(c);
        double v = table.value(c, r);
        if (spec.kind == ColumnKind::kCategorical) {
          for (std::size_t k = 1; k < spec.n_categories(); ++k)
            X(i, t++) = (v == static_cast<double>(k)) ? 1.0 : 0.0;
        } else {
          X(i, t++) = v;
        }
      }
      X(i, t) = 1.0;
    }
    return X;
  }
};

struct MiceState {
  std::vector<std::size_t> feature_targets;  // feature cols with missing
  std::vector<std::vector<std::size_t>> miss_rows;  // per schema column
  std::vector<std::vector<std::size_t>> obs_rows;
  std::vector<double> z_scale;  // sd of observed values per column
};

MiceState scan(const DataTable& table) {
  MiceState st;
  const DatasetSchema& schema = table.schema();
  st.miss_rows.resize(schema.n_columns());
  st.obs_rows.resize(schema.n_columns());
  st.z_scale.assign(schema.n_columns(), 1.0);
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    for (std::size_t r = 0; r < table.n_rows(); ++r)
      (table.is_missing(c, r) ? st.miss_rows[c] : st.obs_rows[c]).push_back(r);
    if (!st.miss_rows[c].empty() && is_feature(schema.column(c)))
      st.feature_targets.push_back(c);
    if (schema.column(c).is_continuous() && st.obs_rows[c].size() > 1) {
      std::vector<double> obs = table.observed(c);
      double sd = std::sqrt(variance(obs));
      if (sd > 0.0) st.z_scale[c] = sd;
    }
  }
  return st;
}

ImputerModel::Regressor fit_column_regressor(const DataTable& filled,
                                             const MiceState& st,
                                             std::size_t target) {
  const ColumnSpec& spec = filled.schema().column(target);
  Design design(filled.schema(), target);
  Eigen::MatrixXd X = design.build(filled, st.obs_rows[target]);
  ImputerModel::Regressor reg;
  reg.fitted = true;
  reg.continuous = spec.is_continuous();
  if (spec.is_continuous()) {
    Eigen::VectorXd y(st.obs_rows[target].size());
    for (std::size_t i = 0; i < st.obs_rows[target].size(); ++i)
      y[i] = filled.value(target, st.obs_rows[target][i]);
    reg.coef = solve_least_squares(X, y).transpose();
  } else {
    std::vector<std::size_t> y(st.obs_rows[target].size());
    for (std::size_t i = 0; i < st.obs_rows[target].size(); ++i)
      y[i] = static_cast<std::size_t>(
          filled.value(target, st.obs_rows[target][i]));
    reg.coef = fit_logistic_ovr(X, y, spec.n_categories(),
                                kLogisticRidge * static_cast<double>(X.rows()));
  }
  return reg;
}

// Predicts the target for the given rows with a frozen regressor. Returns
// (z-scored change accumulated, categorical cells changed).
std::pair<double, std::size_t> predict_into(
    DataTable& filled, const MiceState& st, std::size_t target,
    const ImputerModel::Regressor& reg, double z_scale) {
  const std::vector<std::size_t>& rows = st.miss_rows[target];
  if (rows.empty()) return {0.0, 0};
  Design design(filled.schema(), target);
  Eigen::MatrixXd X = design.build(filled, rows);
  double change = 0.0;
  std::size_t churn = 0;
  if (reg.continuous) {
    Eigen::VectorXd pred = X * reg.coef.transpose();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double old = filled.value(target, rows[i]);
      change += std::fabs(pred[i] - old) / z_scale;
      filled.set(target, rows[i], pred[i]);
    }
  } else {
    Eigen::MatrixXd logits = X * reg.coef.transpose();  // rows x classes
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < static_cast<std::size_t>(logits.cols()); ++k)
        if (logits(i, k) > logits(i, best)) best = k;
      double old = filled.value(target, rows[i]);
      if (old != static_cast<double>(best)) ++churn;
      filled.set(target, rows[i], static_cast<double>(best));
    }
  }
  return {change, churn};
}

}  // namespace

ImputeMethod parse_method(const std::string& name) {
  if (name == "median") return ImputeMethod::kMedian;
  if (name == "chained") return ImputeMethod::kChained;
  throw Error("impute: unknown method '" + name + "'");
}

std::string to_string(ImputeMethod method) {
  return method == ImputeMethod::kMedian ? "median" : "chained";
}

DataTable impute_median(const DataTable& table) {
  DataTable out = table;
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    if (table.n_missing(c) == 0) continue;
    double fill = column_fill(table, c);
    for (std::size_t r = 0; r < table.n_rows(); ++r)
      if (table.is_missing(c, r)) out.set(c, r, fill);
  }
  return out;
}

ChainedResult impute_chained(const DataTable& table, const ImputeConfig& cfg) {
  cfg.check();
  ChainedResult result{impute_median(table)};
  MiceState st = scan(table);

  std::size_t n_cont_cells = 0;
  for (std::size_t c : st.feature_targets)
    if (table.schema().column(c).is_continuous())
      n_cont_cells += st.miss_rows[c].size();

  for (std::size_t iter = 1; iter <= cfg.max_iterations; ++iter) {
    // A cycle whose mean change falls below the tolerance is rolled back:
    // the state was already converged before it ran.
    DataTable before = result.table;
    double change = 0.0;
    std::size_t churn = 0;
    for (std::size_t target : st.feature_targets) {
      ImputerModel::Regressor reg =
          fit_column_regressor(result.table, st, target);
      auto [d, ch] =
          predict_into(result.table, st, target, reg, st.z_scale[target]);
      change += d;
      churn += ch;
    }
    result.iterations = iter;
    result.categorical_churn = churn;
    double mean_change =
        n_cont_cells == 0 ? 0.0 : change / static_cast<double>(n_cont_cells);
    if (mean_change < cfg.convergence_tol) {
      result.table = std::move(before);
      result.converged = true;
      break;
    }
  }
  return result;
}

ImputerModel fit_imputer(const DataTable& train, const ImputeConfig& cfg) {
  cfg.check();
  ImputerModel model;
  model.method = cfg.method;
  model.config = cfg;
  model.schema = train.schema_ptr();
  model.fill.resize(train.n_columns());
  for (std::size_t c = 0; c < train.n_columns(); ++c)
    model.fill[c] = column_fill(train, c);
  model.regressors.resize(train.n_columns());

  if (cfg.method == ImputeMethod::kChained) {
    ChainedResult completed = impute_chained(train, cfg);
    MiceState st = scan(train);
    for (std::size_t target : st.feature_targets)
      model.regressors[target] =
          fit_column_regressor(completed.table, st, target);
  }
  return model;
}

DataTable apply_imputer(const ImputerModel& model, const DataTable& other) {
  if (!schemas_compatible(*model.schema, other.schema()))
    throw Error("apply_imputer: schema mismatch");
  DataTable out = other;
  MiceState st = scan(other);

  // Initialization with the frozen training statistics.
  for (std::size_t c = 0; c < other.n_columns(); ++c)
    for (std::size_t r : st.miss_rows[c]) out.set(c, r, model.fill[c]);
  if (model.method == ImputeMethod::kMedian) return out;

  std::vector<std::size_t> targets;
  std::size_t n_cont_cells = 0;
  for (std::size_t c : st.feature_targets) {
    if (!model.regressors[c].fitted) continue;  // fall back to the fill value
    targets.push_back(c);
    if (other.schema().column(c).is_continuous())
      n_cont_cells += st.miss_rows[c].size();
  }

  for (std::size_t iter = 1; iter <= model.config.max_iterations; ++iter) {
    DataTable before = out;
    double change = 0.0;
    for (std::size_t target : targets) {
      auto [d, ch] = predict_into(out, st, target, model.regressors[target],
                                  st.z_scale[target]);
      change += d;
      (void)ch;
    }
    double mean_change =
        n_cont_cells == 0 ? 0.0 : change / static_cast<double>(n_cont_cells);
    if (mean_change < model.config.convergence_tol) {
      out = std::move(before);
      break;
    }
  }
  return out;
}

}  // namespace survaudit::impute
