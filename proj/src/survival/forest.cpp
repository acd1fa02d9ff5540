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

#include "survaudit/survival/forest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "survaudit/util/rng.hpp"

namespace survaudit::surv {

namespace {

// Node-local survival bookkeeping: distinct event times with pooled death
// and at-risk counts, plus each sample's count of event times at or before
// its own time (c_i), so child at-risk counts reduce to suffix sums over a
// histogram of c_i.
struct NodeStats {
  std::vector<double> event_times;       // ascending
  std::vector<std::size_t> deaths;       // d_k
  std::vector<std::size_t> at_risk;      // Y_k
  std::vector<std::size_t> time_count;   // c_i per node sample
  std::vector<std::size_t> death_index;  // event-time index, or npos
};

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

NodeStats node_stats(const SurvivalData& data,
                     const std::vector<std::size_t>& samples) {
  NodeStats st;
  std::vector<double> death_times;
  for (std::size_t i : samples)
    if (data.events[i] != 0) death_times.push_back(data.times[i]);
  std::sort(death_times.begin(), death_times.end());
  death_times.erase(std::unique(death_times.begin(), death_times.end()),
                    death_times.end());
  st.event_times = std::move(death_times);
  std::size_t m = st.event_times.size();
  st.deaths.assign(m, 0);
  st.at_risk.assign(m, 0);
  st.time_count.resize(samples.size());
  st.death_index.assign(samples.size(), kNpos);

  std::vector<std::size_t> hist(m + 1, 0);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    std::size_t i = samples[s];
    std::size_t c = static_cast<std::size_t>(
        std::upper_bound(st.event_times.begin(), st.event_times.end(),
                         data.times[i]) -
        st.event_times.begin());
    st.time_count[s] = c;
    ++hist[c];
    if (data.events[i] != 0 && c > 0 &&
        st.event_times[c - 1] == data.times[i]) {
      st.death_index[s] = c - 1;
      ++st.deaths[c - 1];
    }
  }
  // at_risk[k] counts samples with t_i >= tau_k, i.e. c_i > k.
  std::size_t suffix = 0;
  for (std::size_t k = m; k-- > 0;) {
    suffix += hist[k + 1];
    st.at_risk[k] = suffix;
  }
  return st;
}

// Standardized two-sample log-rank statistic |num| / sqrt(var) given the
// left-child death counts and c_i histogram. Returns -1 when the variance
// vanishes.
double logrank_statistic(const NodeStats& st,
                         const std::vector<std::size_t>& left_deaths,
                         const std::vector<std::size_t>& left_count_hist) {
  std::size_t m = st.event_times.size();
  double num = 0.0, var = 0.0;
  std::size_t left_at_risk = 0;
  // Walk event times descending, accumulating the suffix of the histogram.
  for (std::size_t k = m; k-- > 0;) {
    left_at_risk += left_count_hist[k + 1];
    double y = static_cast<double>(st.at_risk[k]);
    double d = static_cast<double>(st.deaths[k]);
    double y1 = static_cast<double>(left_at_risk);
    if (y < 2.0 || d <= 0.0) continue;
    num += static_cast<double>(left_deaths[k]) - y1 * d / y;
    var += (y1 / y) * (1.0 - y1 / y) * ((y - d) / (y - 1.0)) * d;
  }
  if (var <= 0.0) return -1.0;
  return std::fabs(num) / std::sqrt(var);
}

struct Split {
  double statistic = -1.0;
  std::size_t feature = 0;
  double threshold = 0.0;
};

Split find_best_split(const SurvivalData& data,
                      const std::vector<std::size_t>& samples,
                      const NodeStats& st,
                      const std::vector<std::size_t>& features,
                      std::size_t min_leaf) {
  Split best;
  std::size_t m = st.event_times.size();
  if (m == 0) return best;
  std::size_t n = samples.size();

  std::vector<std::size_t> order(n);
  for (std::size_t f : features) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return data.features(samples[a], f) < data.features(samples[b], f);
    });

    std::vector<std::size_t> left_deaths(m, 0);
    std::vector<std::size_t> hist(m + 1, 0);  // histogram of c_i in left
    std::size_t moved = 0;
    std::size_t g = 0;
    while (g < n) {
      double value = data.features(samples[order[g]], f);
      std::size_t h = g;
      while (h < n && data.features(samples[order[h]], f) == value) {
        std::size_t s = order[h];
        if (st.death_index[s] != kNpos) ++left_deaths[st.death_index[s]];
        ++hist[st.time_count[s]];
        ++moved;
        ++h;
      }
      g = h;
      if (g >= n) break;  // no split above the largest value
      if (moved < min_leaf || n - moved < min_leaf) continue;
      double stat = logrank_statistic(st, left_deaths, hist);
      if (stat > best.statistic) {
        double upper = data.features(samples[order[g]], f);
        double mid = value + 0.5 * (upper - value);
        if (mid == upper) mid = value;  // guard midpoint rounding up
        best.statistic = stat;
        best.feature = f;
        best.threshold = mid;
      }
    }
  }
  return best;
}

std::vector<std::pair<double, double>> nelson_aalen(const NodeStats& st) {
  std::vector<std::pair<double, double>> chf;
  double cum = 0.0;
  for (std::size_t k = 0; k < st.event_times.size(); ++k) {
    cum += static_cast<double>(st.deaths[k]) /
           static_cast<double>(st.at_risk[k]);
    chf.emplace_back(st.event_times[k], cum);
  }
  return chf;
}

SurvivalTree grow_tree(const SurvivalData& data,
                       const ForestHyperparams& params, Rng& rng) {
  std::size_t n = data.n();
  std::size_t p = data.n_features();
  std::size_t mtry = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::ceil(std::sqrt(static_cast<double>(p)))));

  std::vector<std::size_t> root(n);
  if (params.bootstrap) {
    for (std::size_t i = 0; i < n; ++i)
      root[i] = static_cast<std::size_t>(rng.uniform_int(n));
  } else {
    std::iota(root.begin(), root.end(), 0);
  }

  SurvivalTree tree;
  struct Work {
    int node;
    std::vector<std::size_t> samples;
    std::size_t depth;
  };
  std::vector<Work> stack;
  tree.nodes.emplace_back();
  stack.push_back({0, std::move(root), 0});

  while (!stack.empty()) {
    Work work = std::move(stack.back());
    stack.pop_back();
    NodeStats st = node_stats(data, work.samples);

    Split split;
    bool allow_split = work.depth < params.max_depth &&
                       work.samples.size() >= params.min_samples_split;
    if (allow_split) {
      std::vector<std::size_t> features =
          rng.sample_without_replacement(p, mtry);
      split = find_best_split(data, work.samples, st, features,
                              params.min_samples_leaf);
    }

    if (split.statistic < 0.0) {
      tree.nodes[work.node].leaf = static_cast<int>(tree.leaf_chf.size());
      tree.leaf_chf.push_back(nelson_aalen(st));
      tree.leaf_n.push_back(work.samples.size());
      continue;
    }

    std::vector<std::size_t> left, right;
    for (std::size_t s : work.samples) {
      if (data.features(s, split.feature) <= split.threshold)
        left.push_back(s);
      else
        right.push_back(s);
    }

    int left_id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    int right_id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes[work.node].feature = static_cast<int>(split.feature);
    tree.nodes[work.node].threshold = split.threshold;
    tree.nodes[work.node].left = left_id;
    tree.nodes[work.node].right = right_id;
    stack.push_back({right_id, std::move(right), work.depth + 1});
    stack.push_back({left_id, std::move(left), work.depth + 1});
  }
  return tree;
}

}  // namespace

double SurvivalTree::chf_at(const Eigen::Ref<const Eigen::RowVectorXd>& x,
                            double t) const {
  int node = 0;
  while (nodes[node].feature >= 0) {
    node = x[nodes[node].feature] <= nodes[node].threshold ? nodes[node].left
                                                           : nodes[node].right;
  }
  const auto& chf = leaf_chf[nodes[node].leaf];
  auto it = std::upper_bound(
      chf.begin(), chf.end(), t,
      [](double value, const std::pair<double, double>& step) {
        return value < step.first;
      });
  if (it == chf.begin()) return 0.0;
  return (it - 1)->second;
}

ForestModel fit_rsf(const SurvivalData& data, const ForestHyperparams& params,
                    std::uint64_t seed) {
  if (params.n_estimators == 0) throw Error("fit_rsf: need >= 1 tree");
  if (data.n() < 2 * params.min_samples_split)
    throw Error("fit_rsf: need n >= 2*min_samples_split");
  if (params.min_samples_leaf == 0)
    throw Error("fit_rsf: min_samples_leaf must be >= 1");

  ForestModel model;
  model.params = params;
  model.seed = seed;
  model.feature_names = data.feature_names;
  model.horizon = 0.0;
  for (std::size_t i = 0; i < data.n(); ++i)
    if (data.events[i] != 0) model.horizon = std::max(model.horizon, data.times[i]);

  Rng root(seed);
  model.trees.reserve(params.n_estimators);
  for (std::size_t t = 0; t < params.n_estimators; ++t) {
    Rng tree_rng = root.stream("tree", t);
    model.trees.push_back(grow_tree(data, params, tree_rng));
  }
  return model;
}

Eigen::VectorXd rsf_risk(const ForestModel& model, const Eigen::MatrixXd& X) {
  if (static_cast<std::size_t>(X.cols()) != model.n_features())
    throw Error("rsf_risk: feature count mismatch");
  Eigen::VectorXd risk = Eigen::VectorXd::Zero(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    double sum = 0.0;
    for (const SurvivalTree& tree : model.trees)
      sum += tree.chf_at(X.row(i), model.horizon);
    risk[i] = sum / static_cast<double>(model.trees.size());
  }
  return risk;
}

Eigen::MatrixXd rsf_survival(const ForestModel& model,
                             const Eigen::MatrixXd& X,
                             const std::vector<double>& grid) {
  if (static_cast<std::size_t>(X.cols()) != model.n_features())
    throw Error("rsf_survival: feature count mismatch");
  Eigen::MatrixXd out(X.rows(), grid.size());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    for (std::size_t g = 0; g < grid.size(); ++g) {
      double sum = 0.0;
      for (const SurvivalTree& tree : model.trees)
        sum += tree.chf_at(X.row(i), grid[g]);
      out(i, g) = std::exp(-sum / static_cast<double>(model.trees.size()));
    }
  }
  return out;
}

}  // namespace survaudit::surv
