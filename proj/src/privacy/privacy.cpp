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

#include "survaudit/privacy/privacy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "survaudit/util/linear.hpp"
#include "survaudit/util/rng.hpp"

namespace survaudit::privacy {

namespace {

constexpr double kRelTolDefault = 0.05;
constexpr double kAttackerRidge = 1e-3;  // per observation
constexpr std::size_t kKnnNeighbors = 5;

// Min-max scaling over matrix columns; degenerate columns map to 0.
struct MinMaxScale {
  Eigen::VectorXd lo;
  Eigen::VectorXd span;  // 0 marks degenerate

  static MinMaxScale fit(const std::vector<const Eigen::MatrixXd*>& mats) {
    MinMaxScale s;
    Eigen::Index cols = mats.front()->cols();
    s.lo = Eigen::VectorXd::Constant(cols,
                                     std::numeric_limits<double>::infinity());
    Eigen::VectorXd hi = Eigen::VectorXd::Constant(
        cols, -std::numeric_limits<double>::infinity());
    for (const auto* m : mats) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        s.lo[j] = std::min(s.lo[j], m->col(j).minCoeff());
        hi[j] = std::max(hi[j], m->col(j).maxCoeff());
      }
    }
    s.span = hi - s.lo;
    return s;
  }

  Eigen::MatrixXd apply(const Eigen::MatrixXd& m) const {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (span[j] > 0.0)
        out.col(j) = (m.col(j).array() - lo[j]) / span[j];
      else
        out.col(j).setZero();
    }
    return out;
  }
};

double squared_distance(const Eigen::MatrixXd& a, Eigen::Index i,
                        const Eigen::MatrixXd& b, Eigen::Index j) {
  return (a.row(i) - b.row(j)).squaredNorm();
}

// Nearest-neighbor distance from each row of `queries` to `ref`.
std::vector<double> nn_distance(const Eigen::MatrixXd& queries,
                                const Eigen::MatrixXd& ref) {
  std::vector<double> out(queries.rows());
  for (Eigen::Index i = 0; i < queries.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < ref.rows(); ++j)
      best = std::min(best, squared_distance(queries, i, ref, j));
    out[static_cast<std::size_t>(i)] = std::sqrt(best);
  }
  return out;
}

// Within-set nearest neighbor, excluding the query point itself (by index).
std::vector<double> nn_distance_self(const Eigen::MatrixXd& m) {
  std::vector<double> out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
      if (j == i) continue;
      best = std::min(best, squared_distance(m, i, m, j));
    }
    out[static_cast<std::size_t>(i)] = std::sqrt(best);
  }
  return out;
}

Eigen::MatrixXd take_matrix_rows(const Eigen::MatrixXd& m,
                                 const std::vector<std::size_t>& rows) {
  Eigen::MatrixXd out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    out.row(i) = m.row(rows[i]);
  return out;
}

std::vector<std::vector<std::size_t>> make_folds(std::size_t n,
                                                 std::size_t folds, Rng rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  std::vector<std::vector<std::size_t>> out(folds);
  for (std::size_t i = 0; i < n; ++i) out[i % folds].push_back(idx[i]);
  return out;
}

}  // namespace

Eigen::MatrixXd to_matrix(const DataTable& table) {
  Eigen::MatrixXd out(table.n_rows(), table.n_columns());
  for (std::size_t c = 0; c < table.n_columns(); ++c) {
    for (std::size_t r = 0; r < table.n_rows(); ++r) {
      if (table.is_missing(c, r))
        throw Error("privacy: table must be complete (column '" +
                    table.schema().column(c).name + "')");
      out(r, c) = table.value(c, r);
    }
  }
  return out;
}

ExactMatchResult exact_match(const DataTable& real, const DataTable& synth,
                             double rel_tol) {
  if (!schemas_compatible(real.schema(), synth.schema()))
    throw Error("exact_match: schema mismatch");
  const DatasetSchema& schema = real.schema();

  std::vector<std::size_t> categorical, numeric;
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    (schema.column(c).is_continuous() ? numeric : categorical).push_back(c);
  }

  // Bucket real rows by their categorical signature; the numeric 5% rule is
  // then checked inside the bucket only.
  auto signature = [&](const DataTable& t, std::size_t r) {
    std::string key;
    for (std::size_t c : categorical) {
      if (t.is_missing(c, r))
        key += "m;";
      else
        key += std::to_string(static_cast<long long>(t.value(c, r))) + ";";
    }
    return key;
  };
  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t r = 0; r < real.n_rows(); ++r)
    buckets[signature(real, r)].push_back(r);

  ExactMatchResult result;
  for (std::size_t s = 0; s < synth.n_rows(); ++s) {
    auto it = buckets.find(signature(synth, s));
    if (it == buckets.end()) continue;
    for (std::size_t r : it->second) {
      bool match = true;
      for (std::size_t c : numeric) {
        bool miss_r = real.is_missing(c, r);
        bool miss_s = synth.is_missing(c, s);
        if (miss_r != miss_s) {
          match = false;
          break;
        }
        if (miss_r) continue;
        double vr = real.value(c, r);
        double vs = synth.value(c, s);
        if (vr == 0.0 ? vs != 0.0
                      : std::fabs(vs - vr) > rel_tol * std::fabs(vr)) {
          match = false;
          break;
        }
      }
      if (match) {
        result.matches.emplace_back(s, r);
        break;
      }
    }
  }
  result.rate = synth.n_rows() == 0
                    ? 0.0
                    : static_cast<double>(result.matches.size()) /
                          static_cast<double>(synth.n_rows());
  return result;
}

MiaResult mia_accuracy(const DataTable& train, const DataTable& test,
                       const DataTable& synth, std::size_t folds,
                       std::uint64_t seed) {
  if (test.n_rows() > train.n_rows())
    throw Error("mia_accuracy: test set larger than train set");
  if (folds == 0) throw Error("mia_accuracy: folds must be >= 1");
  if (test.n_rows() == 0 || synth.n_rows() == 0)
    throw Error("mia_accuracy: empty input");

  Eigen::MatrixXd m_train = to_matrix(train);
  Eigen::MatrixXd m_test = to_matrix(test);
  Eigen::MatrixXd m_synth = to_matrix(synth);

  // Shared min-max fitted on the combined training and synthetic data.
  MinMaxScale scale = MinMaxScale::fit({&m_train, &m_synth});
  m_train = scale.apply(m_train);
  m_test = scale.apply(m_test);
  m_synth = scale.apply(m_synth);

  std::vector<double> test_dist = nn_distance(m_test, m_synth);
  std::size_t m = test.n_rows();

  Rng root(seed);
  MiaResult result;
  for (std::size_t fold = 0; fold < folds; ++fold) {
    Rng fold_rng = root.stream("mia_fold", fold);
    std::vector<std::size_t> members =
        fold_rng.sample_without_replacement(train.n_rows(), m);
    Eigen::MatrixXd m_members = take_matrix_rows(m_train, members);
    std::vector<double> member_dist = nn_distance(m_members, m_synth);

    std::vector<double> pooled = member_dist;
    pooled.insert(pooled.end(), test_dist.begin(), test_dist.end());
    std::sort(pooled.begin(), pooled.end());
    double threshold = 0.5 * (pooled[m - 1] + pooled[m]);  // even count

    std::size_t correct = 0;
    for (double d : member_dist) correct += (d < threshold);
    for (double d : test_dist) correct += !(d < threshold);
    result.fold_accuracy.push_back(static_cast<double>(correct) /
                                   static_cast<double>(2 * m));
  }
  result.accuracy =
      std::accumulate(result.fold_accuracy.begin(), result.fold_accuracy.end(),
                      0.0) /
      static_cast<double>(folds);
  return result;
}

namespace {

struct KnnPrediction {
  double value = 0.0;  // continuous: weighted mean; categorical: argmax code
};

KnnPrediction knn_predict(const Eigen::MatrixXd& train_x,
                          const std::vector<double>& train_y,
                          const Eigen::RowVectorXd& query, bool categorical,
                          std::size_t n_classes) {
  std::size_t n = static_cast<std::size_t>(train_x.rows());
  std::size_t k = std::min(kKnnNeighbors, n);
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t i = 0; i < n; ++i)
    dist[i] = {(train_x.row(i) - query).squaredNorm(), i};
  std::partial_sort(dist.begin(), dist.begin() + k, dist.end());

  // Distance weighting (1/d); exact hits dominate.
  bool exact = dist[0].first == 0.0;
  KnnPrediction out;
  if (categorical) {
    std::vector<double> votes(n_classes, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
      if (exact && dist[i].first > 0.0) break;
      double w = exact ? 1.0 : 1.0 / std::sqrt(dist[i].first);
      votes[static_cast<std::size_t>(train_y[dist[i].second])] += w;
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < n_classes; ++c)
      if (votes[c] > votes[best]) best = c;
    out.value = static_cast<double>(best);
  } else {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (exact && dist[i].first > 0.0) break;
      double w = exact ? 1.0 : 1.0 / std::sqrt(dist[i].first);
      num += w * train_y[dist[i].second];
      den += w;
    }
    out.value = num / den;
  }
  return out;
}

bool prediction_correct(double predicted, double truth, bool categorical,
                        double rel_tol) {
  if (categorical) return predicted == truth;
  if (truth == 0.0) return predicted == 0.0;
  return std::fabs(predicted - truth) <= rel_tol * std::fabs(truth);
}

}  // namespace

AiaResult aia_scores(const DataTable& train, const DataTable& test,
                     const DataTable& synth, std::size_t folds,
                     std::uint64_t seed) {
  if (folds < 2) throw Error("aia_scores: folds must be >= 2");
  const DatasetSchema& schema = train.schema();
  if (!schemas_compatible(schema, synth.schema()) ||
      !schemas_compatible(schema, test.schema()))
    throw Error("aia_scores: schema mismatch");

  Eigen::MatrixXd m_train = to_matrix(train);
  Eigen::MatrixXd m_test = to_matrix(test);
  Eigen::MatrixXd m_synth = to_matrix(synth);

  std::vector<std::size_t> targets;
  for (std::size_t c = 0; c < schema.n_columns(); ++c)
    if (schema.column(c).role == ColumnRole::kFeature) targets.push_back(c);
  if (targets.empty()) throw Error("aia_scores: no sensitive targets");

  Rng root(seed);
  auto synth_folds = make_folds(synth.n_rows(), folds, root.stream("aia_synth"));
  auto train_folds = make_folds(train.n_rows(), folds, root.stream("aia_train"));
  auto test_folds = make_folds(test.n_rows(), folds, root.stream("aia_test"));

  AiaResult result;
  result.detail.resize(targets.size());
  std::vector<std::array<double, 4>> sums(targets.size(), {0, 0, 0, 0});

  for (std::size_t fold = 0; fold < folds; ++fold) {
    // Attacker training rows: the synthetic data outside this fold.
    std::vector<std::size_t> attacker_rows;
    for (std::size_t f = 0; f < folds; ++f)
      if (f != fold)
        attacker_rows.insert(attacker_rows.end(), synth_folds[f].begin(),
                             synth_folds[f].end());
    Eigen::MatrixXd a_full = take_matrix_rows(m_synth, attacker_rows);
    Eigen::MatrixXd eval_full = take_matrix_rows(m_train, train_folds[fold]);
    Eigen::MatrixXd base_full = take_matrix_rows(m_test, test_folds[fold]);

    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      std::size_t target = targets[ti];
      const ColumnSpec& spec = schema.column(target);
      bool categorical = spec.is_categorical_like();
      std::size_t n_classes = categorical ? spec.n_categories() : 0;

      // Predictors: every column except the target.
      std::vector<std::size_t> pred_cols;
      for (std::size_t c = 0; c < schema.n_columns(); ++c)
        if (c != target) pred_cols.push_back(c);

      auto slice = [&](const Eigen::MatrixXd& m, Eigen::MatrixXd& x,
                       std::vector<double>& y, bool with_intercept) {
        x.resize(m.rows(), pred_cols.size() + (with_intercept ? 1 : 0));
        y.resize(m.rows());
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
          for (std::size_t j = 0; j < pred_cols.size(); ++j)
            x(r, j) = m(r, pred_cols[j]);
          if (with_intercept) x(r, pred_cols.size()) = 1.0;
          y[static_cast<std::size_t>(r)] = m(r, target);
        }
      };

      Eigen::MatrixXd ax, ex, bx;
      std::vector<double> ay, ey, by;
      slice(a_full, ax, ay, true);
      slice(eval_full, ex, ey, true);
      slice(base_full, bx, by, true);

      // Scale predictors with statistics from the attacker training rows
      // (intercept column excluded).
      Eigen::MatrixXd ax_raw = ax.leftCols(pred_cols.size());
      MinMaxScale scale = MinMaxScale::fit({&ax_raw});
      auto rescale = [&](Eigen::MatrixXd& x) {
        Eigen::MatrixXd scaled = scale.apply(x.leftCols(pred_cols.size()));
        x.leftCols(pred_cols.size()) = scaled;
      };
      rescale(ax);
      rescale(ex);
      rescale(bx);

      bool degenerate = true;
      for (std::size_t i = 1; i < ay.size() && degenerate; ++i)
        degenerate = ay[i] == ay[0];
      result.detail[ti].degenerate =
          result.detail[ti].degenerate || degenerate;

      // Linear attacker.
      std::vector<double> linear_eval(ey.size()), linear_base(by.size());
      if (categorical) {
        std::vector<std::size_t> codes(ay.size());
        for (std::size_t i = 0; i < ay.size(); ++i)
          codes[i] = static_cast<std::size_t>(ay[i]);
        Eigen::MatrixXd w = fit_logistic_ovr(
            ax, codes, n_classes,
            kAttackerRidge * static_cast<double>(ax.rows()));
        auto argmax = [&](const Eigen::MatrixXd& x, std::vector<double>& out) {
          Eigen::MatrixXd logits = x * w.transpose();
          for (Eigen::Index r = 0; r < logits.rows(); ++r) {
            Eigen::Index best = 0;
            logits.row(r).maxCoeff(&best);
            out[static_cast<std::size_t>(r)] = static_cast<double>(best);
          }
        };
        argmax(ex, linear_eval);
        argmax(bx, linear_base);
      } else {
        Eigen::VectorXd y(ay.size());
        for (std::size_t i = 0; i < ay.size(); ++i) y[i] = ay[i];
        Eigen::VectorXd beta = solve_ridge(
            ax, y, kAttackerRidge * static_cast<double>(ax.rows()));
        Eigen::VectorXd pe = ex * beta;
        Eigen::VectorXd pb = bx * beta;
        for (std::size_t i = 0; i < linear_eval.size(); ++i)
          linear_eval[i] = pe[static_cast<Eigen::Index>(i)];
        for (std::size_t i = 0; i < linear_base.size(); ++i)
          linear_base[i] = pb[static_cast<Eigen::Index>(i)];
      }

      // k-NN attacker on the same scaled predictors.
      Eigen::MatrixXd ax_knn = ax.leftCols(pred_cols.size());
      Eigen::MatrixXd ex_knn = ex.leftCols(pred_cols.size());
      Eigen::MatrixXd bx_knn = bx.leftCols(pred_cols.size());
      auto knn_all = [&](const Eigen::MatrixXd& x, std::vector<double>& out) {
        out.resize(x.rows());
        for (Eigen::Index r = 0; r < x.rows(); ++r)
          out[static_cast<std::size_t>(r)] =
              knn_predict(ax_knn, ay, x.row(r), categorical, n_classes).value;
      };
      std::vector<double> knn_eval, knn_base;
      knn_all(ex_knn, knn_eval);
      knn_all(bx_knn, knn_base);

      auto accuracy = [&](const std::vector<double>& pred,
                          const std::vector<double>& truth) {
        std::size_t correct = 0;
        for (std::size_t i = 0; i < pred.size(); ++i)
          correct += prediction_correct(pred[i], truth[i], categorical,
                                        kRelTolDefault);
        return pred.empty() ? 0.0
                            : static_cast<double>(correct) /
                                  static_cast<double>(pred.size());
      };
      sums[ti][0] += accuracy(linear_eval, ey);
      sums[ti][1] += accuracy(knn_eval, ey);
      sums[ti][2] += accuracy(linear_base, by);
      sums[ti][3] += accuracy(knn_base, by);
    }
  }

  double f = static_cast<double>(folds);
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    AiaTargetDetail& d = result.detail[ti];
    d.target = schema.column(targets[ti]).name;
    d.linear_accuracy = sums[ti][0] / f;
    d.knn_accuracy = sums[ti][1] / f;
    d.linear_baseline = sums[ti][2] / f;
    d.knn_baseline = sums[ti][3] / f;
    result.linear_score += d.linear_accuracy;
    result.knn_score += d.knn_accuracy;
    result.linear_baseline += d.linear_baseline;
    result.knn_baseline += d.knn_baseline;
  }
  double t = static_cast<double>(targets.size());
  result.linear_score /= t;
  result.knn_score /= t;
  result.linear_baseline /= t;
  result.knn_baseline /= t;
  return result;
}

double nnaa_pair(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q,
                 std::size_t iterations, std::uint64_t seed) {
  if (p.rows() < 2 || q.rows() < 2)
    throw Error("nnaa: each set needs at least 2 rows");

  // `a_within` may be precomputed when the a-side is fixed across
  // subsampling iterations.
  auto evaluate = [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                     const std::vector<double>* a_within_cache) {
    std::vector<double> a_cross = nn_distance(a, b);
    std::vector<double> a_within =
        a_within_cache ? *a_within_cache : nn_distance_self(a);
    std::vector<double> b_cross = nn_distance(b, a);
    std::vector<double> b_within = nn_distance_self(b);
    double sum_a = 0.0, sum_b = 0.0;
    for (std::size_t i = 0; i < a_cross.size(); ++i)
      sum_a += (a_cross[i] > a_within[i]) ? 1.0 : 0.0;
    for (std::size_t i = 0; i < b_cross.size(); ++i)
      sum_b += (b_cross[i] > b_within[i]) ? 1.0 : 0.0;
    return 0.5 * (sum_a / static_cast<double>(a_cross.size()) +
                  sum_b / static_cast<double>(b_cross.size()));
  };

  if (p.rows() == q.rows()) return evaluate(p, q, nullptr);

  if (iterations == 0) throw Error("nnaa: iterations must be >= 1");
  std::size_t target = static_cast<std::size_t>(std::min(p.rows(), q.rows()));
  const Eigen::MatrixXd& small = p.rows() > q.rows() ? q : p;
  const Eigen::MatrixXd& big = p.rows() > q.rows() ? p : q;
  std::vector<double> small_within = nn_distance_self(small);

  // Subsample through a canonical (lexicographic) ordering of the larger
  // set, so permuting its rows changes nothing.
  std::vector<std::size_t> canon(static_cast<std::size_t>(big.rows()));
  std::iota(canon.begin(), canon.end(), 0);
  std::sort(canon.begin(), canon.end(), [&](std::size_t a, std::size_t b) {
    for (Eigen::Index j = 0; j < big.cols(); ++j) {
      if (big(a, j) != big(b, j)) return big(a, j) < big(b, j);
    }
    return false;
  });

  Rng rng(seed);
  double sum = 0.0;
  for (std::size_t it = 0; it < iterations; ++it) {
    Rng iter_rng = rng.stream("nnaa_iter", it);
    std::vector<std::size_t> rows = iter_rng.sample_without_replacement(
        static_cast<std::size_t>(big.rows()), target);
    for (std::size_t& r : rows) r = canon[r];
    Eigen::MatrixXd sub = take_matrix_rows(big, rows);
    sum += evaluate(small, sub, &small_within);
  }
  return sum / static_cast<double>(iterations);
}

NnaaResult nnaa(const DataTable& train, const DataTable& test,
                const DataTable& synth, std::size_t iterations,
                std::uint64_t seed) {
  Eigen::MatrixXd m_train = to_matrix(train);
  Eigen::MatrixXd m_test = to_matrix(test);
  Eigen::MatrixXd m_synth = to_matrix(synth);

  // Min-max on the pooled data.
  MinMaxScale scale = MinMaxScale::fit({&m_train, &m_test, &m_synth});
  m_train = scale.apply(m_train);
  m_test = scale.apply(m_test);
  m_synth = scale.apply(m_synth);

  Rng root(seed);
  NnaaResult result;
  result.nnaa_train_synth = nnaa_pair(m_train, m_synth, iterations,
                                      root.stream("nnaa_ts").root_seed());
  result.nnaa_test_synth = nnaa_pair(m_test, m_synth, iterations,
                                     root.stream("nnaa_es").root_seed());
  result.privacy_loss = result.nnaa_test_synth - result.nnaa_train_synth;
  return result;
}

}  // namespace survaudit::privacy
