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

#include <doctest.h>

#include <cmath>

#include "support/sim.hpp"
#include "survaudit/survival/concordance.hpp"
#include "survaudit/survival/forest.hpp"
#include "survaudit/util/rng.hpp"

using namespace survaudit;
using namespace survaudit::surv;

namespace {

bool forests_identical(const ForestModel& a, const ForestModel& b) {
  if (a.trees.size() != b.trees.size()) return false;
  for (std::size_t t = 0; t < a.trees.size(); ++t) {
    const SurvivalTree& x = a.trees[t];
    const SurvivalTree& y = b.trees[t];
    if (x.nodes.size() != y.nodes.size() || x.leaf_chf != y.leaf_chf ||
        x.leaf_n != y.leaf_n)
      return false;
    for (std::size_t k = 0; k < x.nodes.size(); ++k) {
      if (x.nodes[k].feature != y.nodes[k].feature ||
          x.nodes[k].threshold != y.nodes[k].threshold ||
          x.nodes[k].left != y.nodes[k].left ||
          x.nodes[k].right != y.nodes[k].right ||
          x.nodes[k].leaf != y.nodes[k].leaf)
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("single-leaf trees reproduce the marginal Nelson-Aalen") {
  SurvivalData d = testsupport::simulate_exponential(60, 0.0, 0.05, 40, 2);
  ForestHyperparams params;
  params.n_estimators = 1;
  params.max_depth = 0;
  params.bootstrap = false;
  ForestModel forest = fit_rsf(d, params, 7);
  REQUIRE(forest.trees.size() == 1);
  CHECK(forest.trees[0].nodes.size() == 1);

  // Direct Nelson-Aalen of the training data.
  std::vector<double> sorted = d.times;
  std::sort(sorted.begin(), sorted.end());
  Eigen::MatrixXd x = d.features.topRows(1);
  double cum = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    double t = sorted[k];
    if (k > 0 && sorted[k] == sorted[k - 1]) continue;
    std::size_t deaths = 0, at_risk = 0;
    for (std::size_t i = 0; i < d.n(); ++i) {
      at_risk += (d.times[i] >= t);
      deaths += (d.times[i] == t && d.events[i] == 1);
    }
    cum += static_cast<double>(deaths) / static_cast<double>(at_risk);
    CHECK(forest.trees[0].chf_at(x.row(0), t) == doctest::Approx(cum).epsilon(1e-12));
  }
}

TEST_CASE("max_depth=0 trees are all single leaves") {
  SurvivalData d = testsupport::simulate_exponential(50, 0.4, 0.05, 40, 3);
  ForestHyperparams params;
  params.n_estimators = 5;
  params.max_depth = 0;
  ForestModel forest = fit_rsf(d, params, 7);
  for (const SurvivalTree& tree : forest.trees)
    CHECK(tree.nodes.size() == 1);
}

TEST_CASE("a perfectly separating feature is chosen at the root") {
  // Feature 0 separates early deaths from late deaths; feature 1 is noise.
  // With p=2 both features enter every node's candidate set.
  Rng rng(13);
  std::size_t n = 120;
  SurvivalData d;
  d.feature_names = {"signal", "noise"};
  d.features.resize(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    bool early = i < n / 2;
    d.times.push_back(early ? 1.0 + rng.uniform01() : 50.0 + rng.uniform01());
    d.events.push_back(1);
    d.features(i, 0) = early ? 0.0 : 1.0;
    d.features(i, 1) = rng.normal();
  }
  ForestHyperparams params;
  params.n_estimators = 50;
  params.max_depth = 3;
  ForestModel forest = fit_rsf(d, params, 11);
  std::size_t on_signal = 0;
  for (const SurvivalTree& tree : forest.trees)
    on_signal += (tree.nodes[0].feature == 0);
  CHECK(on_signal >= 45);  // >= 90% of trees
}

TEST_CASE("forest determinism and leaf-size invariant") {
  SurvivalData d = testsupport::simulate_exponential(150, 0.6, 0.03, 60, 5);
  ForestHyperparams params;
  params.n_estimators = 10;
  params.max_depth = 5;
  params.min_samples_split = 5;
  params.min_samples_leaf = 4;

  ForestModel a = fit_rsf(d, params, 99);
  ForestModel b = fit_rsf(d, params, 99);
  CHECK(forests_identical(a, b));
  ForestModel c = fit_rsf(d, params, 100);
  CHECK_FALSE(forests_identical(a, c));

  for (const SurvivalTree& tree : a.trees)
    for (std::size_t leaf_rows : tree.leaf_n)
      CHECK(leaf_rows >= params.min_samples_leaf);
}

TEST_CASE("forest risk ranks a strong signal") {
  SurvivalData d = testsupport::simulate_exponential(400, 1.0, 0.02, 120, 6);
  ForestHyperparams params;
  params.n_estimators = 20;
  params.max_depth = 5;
  ForestModel forest = fit_rsf(d, params, 1);
  Eigen::VectorXd risks = rsf_risk(forest, d.features);
  std::vector<double> r(risks.data(), risks.data() + risks.size());
  CHECK(c_index(d.times, d.events, r) > 0.6);

  SUBCASE("survival matrix is monotone in time and within [0,1]") {
    std::vector<double> grid{1.0, 5.0, 20.0, 60.0};
    Eigen::MatrixXd s = rsf_survival(forest, d.features.topRows(10), grid);
    for (int i = 0; i < s.rows(); ++i) {
      CHECK(s(i, 0) <= 1.0);
      for (int g = 1; g < s.cols(); ++g) {
        CHECK(s(i, g) <= s(i, g - 1));
        CHECK(s(i, g) >= 0.0);
      }
    }
  }
}

TEST_CASE("fit_rsf validates its inputs") {
  SurvivalData d = testsupport::simulate_exponential(8, 0.0, 0.05, 40, 2);
  ForestHyperparams params;
  params.min_samples_split = 5;
  CHECK_THROWS_AS(fit_rsf(d, params, 1), Error);  // n < 2*min_split
  params.min_samples_split = 2;
  params.n_estimators = 0;
  CHECK_THROWS_AS(fit_rsf(d, params, 1), Error);
}
