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

#include "survaudit/fidelity/fidelity.hpp"

#include <cmath>

#include "survaudit/util/stats.hpp"

namespace survaudit::fidelity {

namespace {

std::vector<double> category_frequencies(const DataTable& table,
                                         std::size_t col) {
  const ColumnSpec& spec = table.schema().column(col);
  std::vector<double> freq(spec.n_categories(), 0.0);
  std::size_t n = 0;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.is_missing(col, r)) continue;
    ++freq[static_cast<std::size_t>(table.value(col, r))];
    ++n;
  }
  if (n == 0)
    throw Error("fidelity: column '" + spec.name + "' has no observed cells");
  for (double& f : freq) f /= static_cast<double>(n);
  return freq;
}

// Pairwise-complete values of two columns within one table.
void pairwise_complete(const DataTable& table, std::size_t i, std::size_t j,
                       std::vector<double>& x, std::vector<double>& y) {
  x.clear();
  y.clear();
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.is_missing(i, r) || table.is_missing(j, r)) continue;
    x.push_back(table.value(i, r));
    y.push_back(table.value(j, r));
  }
}

void check_same_kind(const DataTable& real, const DataTable& synth,
                     std::size_t col) {
  const ColumnSpec& a = real.schema().column(col);
  const ColumnSpec& b = synth.schema().column(col);
  if (a.kind != b.kind || a.categories != b.categories)
    throw Error("fidelity: column '" + a.name +
                "' differs between the two schemas");
}

}  // namespace

double dimwise_categorical(const DataTable& real, const DataTable& synth,
                           std::size_t col) {
  check_same_kind(real, synth, col);
  std::vector<double> fr = category_frequencies(real, col);
  std::vector<double> fs = category_frequencies(synth, col);
  double sum = 0.0;
  for (std::size_t k = 0; k < fr.size(); ++k) sum += std::fabs(fr[k] - fs[k]);
  return 1.0 - sum / static_cast<double>(fr.size());
}

double dimwise_continuous(const DataTable& real, const DataTable& synth,
                          std::size_t col) {
  check_same_kind(real, synth, col);
  std::vector<double> a = real.observed(col);
  std::vector<double> b = synth.observed(col);
  if (a.empty() || b.empty())
    throw Error("fidelity: column '" + real.schema().column(col).name +
                "' has no observed cells");
  return 1.0 - ks_statistic(std::move(a), std::move(b));
}

PairScore corr_score_continuous(const DataTable& real, const DataTable& synth,
                                std::size_t col_i, std::size_t col_j) {
  PairScore result;
  result.column_i = real.schema().column(col_i).name;
  result.column_j = real.schema().column(col_j).name;

  std::vector<double> x, y;
  double r = 0.0, s = 0.0;
  pairwise_complete(real, col_i, col_j, x, y);
  if (!pearson(x, y, r)) {
    result.skipped = true;
    result.reason = "zero variance or too few complete pairs in real data";
    return result;
  }
  pairwise_complete(synth, col_i, col_j, x, y);
  if (!pearson(x, y, s)) {
    result.skipped = true;
    result.reason = "zero variance or too few complete pairs in synthetic data";
    return result;
  }
  result.score = 1.0 - std::fabs(s - r) / 2.0;
  return result;
}

PairScore corr_score_categorical(const DataTable& real, const DataTable& synth,
                                 std::size_t col_i, std::size_t col_j) {
  PairScore result;
  result.column_i = real.schema().column(col_i).name;
  result.column_j = real.schema().column(col_j).name;

  std::size_t ki = real.schema().column(col_i).n_categories();
  std::size_t kj = real.schema().column(col_j).n_categories();
  auto joint = [&](const DataTable& t) {
    std::vector<double> table(ki * kj, 0.0);
    std::size_t n = 0;
    for (std::size_t r = 0; r < t.n_rows(); ++r) {
      if (t.is_missing(col_i, r) || t.is_missing(col_j, r)) continue;
      auto a = static_cast<std::size_t>(t.value(col_i, r));
      auto b = static_cast<std::size_t>(t.value(col_j, r));
      table[a * kj + b] += 1.0;
      ++n;
    }
    if (n == 0) return std::vector<double>{};
    for (double& v : table) v /= static_cast<double>(n);
    return table;
  };

  std::vector<double> jr = joint(real);
  std::vector<double> js = joint(synth);
  if (jr.empty() || js.empty()) {
    result.skipped = true;
    result.reason = "no complete pairs";
    return result;
  }
  double tv = 0.0;
  for (std::size_t k = 0; k < jr.size(); ++k) tv += std::fabs(js[k] - jr[k]);
  result.score = 1.0 - 0.5 * tv;
  return result;
}

FidelityScores fidelity_scores(const DataTable& real, const DataTable& synth) {
  if (!schemas_compatible(real.schema(), synth.schema()))
    throw Error("fidelity: schema mismatch");
  const DatasetSchema& schema = real.schema();
  FidelityScores out;

  double dim_sum = 0.0;
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    double score = schema.column(c).is_continuous()
                       ? dimwise_continuous(real, synth, c)
                       : dimwise_categorical(real, synth, c);
    out.dimension_wise.push_back({schema.column(c).name, score});
    dim_sum += score;
  }
  out.dimension_wise_mean =
      dim_sum / static_cast<double>(out.dimension_wise.size());

  double corr_sum = 0.0;
  std::size_t corr_n = 0;
  for (std::size_t i = 0; i < schema.n_columns(); ++i) {
    for (std::size_t j = i + 1; j < schema.n_columns(); ++j) {
      bool cont_i = schema.column(i).is_continuous();
      bool cont_j = schema.column(j).is_continuous();
      if (cont_i != cont_j) continue;  // mixed pairs are not defined
      PairScore score = cont_i ? corr_score_continuous(real, synth, i, j)
                               : corr_score_categorical(real, synth, i, j);
      if (!score.skipped) {
        corr_sum += score.score;
        ++corr_n;
      }
      out.correlation.push_back(std::move(score));
    }
  }
  out.correlation_mean =
      corr_n > 0 ? corr_sum / static_cast<double>(corr_n) : 0.0;
  return out;
}

}  // namespace survaudit::fidelity
