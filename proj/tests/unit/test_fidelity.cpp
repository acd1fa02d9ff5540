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
#include "survaudit/fidelity/fidelity.hpp"
#include "survaudit/fidelity/km_compare.hpp"
#include "survaudit/fidelity/preservation.hpp"
#include "survaudit/util/rng.hpp"
#include "survaudit/util/stats.hpp"

using namespace survaudit;
using namespace survaudit::fidelity;

namespace {

// Brute-force ECDF sup over the pooled points.
double ks_oracle(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  double d = 0.0;
  for (double v : pooled) {
    double fa = 0.0, fb = 0.0;
    for (double x : a) fa += (x <= v);
    for (double x : b) fb += (x <= v);
    d = std::max(d, std::fabs(fa / static_cast<double>(a.size()) -
                              fb / static_cast<double>(b.size())));
  }
  return d;
}

DataTable column_table(SchemaPtr schema, const std::vector<double>& x0,
                       double categorical_code = 0.0) {
  DataTable t(schema, x0.size());
  for (std::size_t r = 0; r < x0.size(); ++r) {
    t.set(0, r, x0[r]);
    t.set(1, r, categorical_code);
    t.set(2, r, 1.0 + static_cast<double>(r));
    t.set(3, r, 1.0);
  }
  return t;
}

}  // namespace

TEST_CASE("dimwise_continuous formula and oracle agreement") {
  SchemaPtr schema = testsupport::small_schema(1, 1);
  SUBCASE("identical samples score 1") {
    DataTable a = column_table(schema, {1, 2, 3, 4});
    CHECK(dimwise_continuous(a, a, 0) == 1.0);
  }
  SUBCASE("disjoint supports score 0") {
    DataTable a = column_table(schema, {1, 2, 3});
    DataTable b = column_table(schema, {10, 11, 12});
    CHECK(dimwise_continuous(a, b, 0) == 0.0);
  }
  SUBCASE("worked quartet example") {
    DataTable a = column_table(schema, {1, 2, 3, 4});
    DataTable b = column_table(schema, {1, 2, 3, 10});
    CHECK(dimwise_continuous(a, b, 0) == doctest::Approx(0.75).epsilon(1e-15));
  }
  SUBCASE("random pairs match the brute-force oracle exactly") {
    Rng rng(3);
    for (int rep = 0; rep < 25; ++rep) {
      std::size_t na = 2 + rng.uniform_int(80);
      std::size_t nb = 2 + rng.uniform_int(80);
      std::vector<double> a(na), b(nb);
      for (auto& v : a) v = std::round(rng.normal() * 4.0);
      for (auto& v : b) v = std::round(rng.normal() * 4.0 + 1.0);
      DataTable ta = column_table(schema, a);
      DataTable tb = column_table(schema, b);
      CHECK(dimwise_continuous(ta, tb, 0) ==
            doctest::Approx(1.0 - ks_oracle(a, b)).epsilon(1e-15));
    }
  }
}

TEST_CASE("dimwise_categorical frequency arithmetic") {
  SchemaPtr schema = testsupport::small_schema(1, 1);
  SUBCASE("identical frequencies score 1") {
    DataTable a(schema, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      a.set(0, r, 0.0);
      a.set(1, r, r < 2 ? 0.0 : 1.0);
      a.set(2, r, 1.0);
      a.set(3, r, 1.0);
    }
    CHECK(dimwise_categorical(a, a, 1) == 1.0);
  }
  SUBCASE("binary half/half versus all-zero scores 0.5") {
    DataTable a(schema, 4);
    DataTable b(schema, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      a.set(0, r, 0.0);
      a.set(1, r, r < 2 ? 0.0 : 1.0);  // {0.5, 0.5}
      a.set(2, r, 1.0);
      a.set(3, r, 1.0);
      b.set(0, r, 0.0);
      b.set(1, r, 0.0);  // {1.0, 0.0}
      b.set(2, r, 1.0);
      b.set(3, r, 1.0);
    }
    CHECK(dimwise_categorical(a, b, 1) == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("correlation scores") {
  SchemaPtr schema = testsupport::small_schema(2, 2);
  auto fill = [&](DataTable& t, double slope) {
    Rng rng(5);
    for (std::size_t r = 0; r < t.n_rows(); ++r) {
      double x = rng.normal();
      t.set(0, r, x);
      t.set(1, r, slope * x);
      double joint = rng.uniform01();
      // b0, b1 jointly distributed.
      t.set(2, r, joint < 0.5 ? 0.0 : 1.0);
      t.set(3, r, joint < 0.5 ? 0.0 : 1.0);
      t.set(4, r, 1.0 + static_cast<double>(r));
      t.set(5, r, 1.0);
    }
  };
  DataTable real(schema, 60);
  DataTable synth(schema, 60);

  SUBCASE("equal correlations score 1") {
    fill(real, 2.0);
    fill(synth, 3.0);  // still perfectly correlated
    PairScore s = corr_score_continuous(real, synth, 0, 1);
    CHECK_FALSE(s.skipped);
    CHECK(s.score == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("opposite perfect correlations score 0") {
    fill(real, 2.0);
    fill(synth, -1.0);
    PairScore s = corr_score_continuous(real, synth, 0, 1);
    CHECK(s.score == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("formula matches an independent Pearson computation") {
    Rng rng(8);
    DataTable a(schema, 50);
    DataTable b(schema, 50);
    std::vector<double> ax, ay, bx, by;
    for (std::size_t r = 0; r < 50; ++r) {
      double x1 = rng.normal(), y1 = 0.6 * x1 + rng.normal();
      double x2 = rng.normal(), y2 = 0.1 * x2 + rng.normal();
      a.set(0, r, x1);
      a.set(1, r, y1);
      b.set(0, r, x2);
      b.set(1, r, y2);
      ax.push_back(x1);
      ay.push_back(y1);
      bx.push_back(x2);
      by.push_back(y2);
      for (std::size_t c : {2ul, 3ul}) {
        a.set(c, r, 0.0);
        b.set(c, r, 0.0);
      }
      a.set(4, r, 1.0);
      a.set(5, r, 1.0);
      b.set(4, r, 1.0);
      b.set(5, r, 1.0);
    }
    double ra, rb;
    REQUIRE(pearson(ax, ay, ra));
    REQUIRE(pearson(bx, by, rb));
    PairScore s = corr_score_continuous(a, b, 0, 1);
    CHECK(s.score == doctest::Approx(1.0 - std::fabs(rb - ra) / 2.0));
  }
  SUBCASE("zero variance skips the pair with a reason") {
    fill(real, 2.0);
    DataTable flat(schema, 60);
    fill(flat, 2.0);
    for (std::size_t r = 0; r < 60; ++r) flat.set(0, r, 5.0);
    PairScore s = corr_score_continuous(real, flat, 0, 1);
    CHECK(s.skipped);
    CHECK(s.reason.find("synthetic") != std::string::npos);
  }
  SUBCASE("categorical joint arithmetic") {
    // real: mass 0.5 on (0,0) and 0.5 on (1,1); synth: uniform on all four.
    DataTable a(schema, 4);
    DataTable b(schema, 4);
    const double av[4][2] = {{0, 0}, {0, 0}, {1, 1}, {1, 1}};
    const double bv[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t r = 0; r < 4; ++r) {
      a.set(0, r, 0.0);
      a.set(1, r, 0.0);
      a.set(2, r, av[r][0]);
      a.set(3, r, av[r][1]);
      a.set(4, r, 1.0);
      a.set(5, r, 1.0);
      b.set(0, r, 0.0);
      b.set(1, r, 0.0);
      b.set(2, r, bv[r][0]);
      b.set(3, r, bv[r][1]);
      b.set(4, r, 1.0);
      b.set(5, r, 1.0);
    }
    PairScore same = corr_score_categorical(a, a, 2, 3);
    CHECK(same.score == doctest::Approx(1.0));
    PairScore s = corr_score_categorical(a, b, 2, 3);
    CHECK(s.score == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("fidelity_scores aggregates and a permuted copy scores 1") {
  testsupport::HfSimulation sim = testsupport::simulate_hf_table(80, 41, false);
  std::vector<std::size_t> perm(sim.table.n_rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  Rng(9).shuffle(perm);
  DataTable shuffled = take_rows(sim.table, perm);

  FidelityScores scores = fidelity_scores(sim.table, shuffled);
  CHECK(scores.dimension_wise_mean == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& d : scores.dimension_wise)
    CHECK(d.score == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& p : scores.correlation) {
    if (!p.skipped) CHECK(p.score == doctest::Approx(1.0).epsilon(1e-9));
  }
  // Mixed pairs are excluded entirely.
  for (const auto& p : scores.correlation) {
    const ColumnSpec& ci =
        sim.table.schema().column(sim.table.schema().index_of(p.column_i));
    const ColumnSpec& cj =
        sim.table.schema().column(sim.table.schema().index_of(p.column_j));
    CHECK(ci.is_continuous() == cj.is_continuous());
  }
}

TEST_CASE("km_metrics constants, antisymmetry and horizon rules") {
  using surv::KMCurve;
  SUBCASE("identical curves give zeros") {
    KMCurve c = surv::kaplan_meier({1, 2, 3, 4}, {1, 0, 1, 0});
    KmMetrics m = km_metrics(c, c);
    CHECK(m.optimism == 0.0);
    CHECK(m.km_divergence == 0.0);
    CHECK(m.short_sightedness == 0.0);
  }
  SUBCASE("constant gap integrates exactly") {
    KMCurve real;
    real.t_end = 10.0;  // S == 1 throughout
    KMCurve synth;
    synth.times = {0.0};
    synth.survival = {0.8};
    synth.n_at_risk = {5};
    synth.t_end = 10.0;
    KmMetrics m = km_metrics(real, synth);
    CHECK(m.optimism == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(m.km_divergence == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(m.short_sightedness == 0.0);

    KmMetrics swapped = km_metrics(synth, real);
    CHECK(swapped.optimism == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(swapped.km_divergence == doctest::Approx(0.2).epsilon(1e-15));
  }
  SUBCASE("short-sightedness is the truncation ratio, floored at zero") {
    KMCurve real = surv::kaplan_meier({2, 4, 10}, {1, 0, 1});
    KMCurve synth = surv::kaplan_meier({2, 4, 5}, {1, 0, 1});
    CHECK(km_metrics(real, synth).short_sightedness ==
          doctest::Approx(0.5));
    CHECK(km_metrics(synth, real).short_sightedness == 0.0);
  }
}

TEST_CASE("feature_preservation identity, sign flips and shuffles") {
  testsupport::HfSimulation sim = testsupport::simulate_hf_table(1500, 77, false);
  surv::SurvivalData real = surv::to_survival_data(sim.table);

  SUBCASE("an exact copy preserves everything") {
    PreservationResult result = feature_preservation(real, real);
    REQUIRE(result.recall_defined);
    REQUIRE(result.precision_defined);
    CHECK(result.recall == 1.0);
    CHECK(result.precision == 1.0);
    CHECK(result.positives_real >= sim.signal_features.size());
  }

  SUBCASE("a flipped significant feature counts against both scores") {
    surv::SurvivalData flipped = real;
    std::size_t age = 0;
    for (std::size_t j = 0; j < real.feature_names.size(); ++j)
      if (real.feature_names[j] == "Age") age = j;
    // Inverting the covariate flips the association sign but keeps |beta|.
    flipped.features.col(age) = -real.features.col(age);
    PreservationResult result = feature_preservation(real, flipped);
    PreservationResult self = feature_preservation(real, real);
    CHECK(result.true_positives + 1 == self.true_positives);
    CHECK(result.positives_synth == self.positives_synth);
  }

  SUBCASE("shuffling one signal column loses exactly that feature") {
    surv::SurvivalData shuffled = real;
    std::size_t age = 0;
    for (std::size_t j = 0; j < real.feature_names.size(); ++j)
      if (real.feature_names[j] == "Age") age = j;
    std::vector<std::size_t> perm(real.n());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    Rng(4).shuffle(perm);
    for (std::size_t i = 0; i < perm.size(); ++i)
      shuffled.features(i, age) = real.features(perm[i], age);
    PreservationResult result = feature_preservation(real, shuffled);
    PreservationResult self = feature_preservation(real, real);
    CHECK(result.true_positives == self.true_positives - 1);
    CHECK(result.recall ==
          doctest::Approx(1.0 - 1.0 / static_cast<double>(self.positives_real)));
  }
}
