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
#include "survaudit/core/validate.hpp"
#include "survaudit/fidelity/fidelity.hpp"
#include "survaudit/generate/copula.hpp"
#include "survaudit/generate/equalize.hpp"
#include "survaudit/ingest/constraints.hpp"
#include "survaudit/util/rng.hpp"
#include "survaudit/util/stats.hpp"

using namespace survaudit;
using namespace survaudit::gen;

TEST_CASE("fit_copula latent correlations") {
  SchemaPtr schema = testsupport::small_schema(2, 0);
  Rng rng(19);
  std::size_t n = 400;
  DataTable t(schema, n);
  for (std::size_t r = 0; r < n; ++r) {
    double x = rng.normal();
    t.set(0, r, x);
    t.set(1, r, std::exp(x));  // perfectly monotone in x
    t.set(2, r, 1.0 + rng.uniform01());
    t.set(3, r, rng.bernoulli(0.4) ? 1.0 : 0.0);
  }
  CopulaModel model = fit_copula(t, 5);
  CHECK(model.latent_corr(0, 1) == doctest::Approx(1.0).epsilon(1e-3));

  SUBCASE("independent columns have near-zero latent correlation") {
    DataTable u(schema, n);
    for (std::size_t r = 0; r < n; ++r) {
      u.set(0, r, rng.normal());
      u.set(1, r, rng.normal());
      u.set(2, r, 1.0 + rng.uniform01());
      u.set(3, r, rng.bernoulli(0.4) ? 1.0 : 0.0);
    }
    CopulaModel m2 = fit_copula(u, 5);
    CHECK(std::fabs(m2.latent_corr(0, 1)) < 3.0 / std::sqrt(static_cast<double>(n)));
  }

  SUBCASE("all-missing column is rejected") {
    DataTable u = t;
    for (std::size_t r = 0; r < n; ++r) u.set_missing(0, r);
    CHECK_THROWS_AS(fit_copula(u, 5), Error);
  }
}

TEST_CASE("sample_copula marginal and structural fidelity") {
  testsupport::HfSimulation sim = testsupport::simulate_hf_table(2500, 3, false);
  CopulaModel model = fit_copula(sim.table, 41);

  SUBCASE("n = 0 gives an empty table") {
    DataTable empty = sample_copula(model, 0, false);
    CHECK(empty.n_rows() == 0);
  }

  SUBCASE("fixed seed reproduces bit for bit") {
    DataTable a = sample_copula(model, 200, true);
    DataTable b = sample_copula(model, 200, true);
    CHECK(content_hash(a) == content_hash(b));
  }

  SUBCASE("continuous marginals track the training data") {
    DataTable sample = sample_copula(model, 2500, false);
    std::size_t age = sim.table.col_index("Age");
    double score = fidelity::dimwise_continuous(sim.table, sample, age);
    CHECK(score >= 0.95);
    std::size_t sbp = sim.table.col_index("SBP");
    CHECK(fidelity::dimwise_continuous(sim.table, sample, sbp) >= 0.95);
  }

  SUBCASE("refit on its own samples recovers the latent correlation") {
    DataTable sample = sample_copula(model, 6000, false);
    CopulaModel refit = fit_copula(sample, 1);
    std::size_t sbp = sim.table.col_index("SBP");
    std::size_t dbp = sim.table.col_index("DBP");
    CHECK(refit.latent_corr(sbp, dbp) ==
          doctest::Approx(model.latent_corr(sbp, dbp)).epsilon(0.08));
  }

  SUBCASE("missingness reintroduction matches the recorded rates") {
    testsupport::HfSimulation missing = testsupport::simulate_hf_table(2000, 4, true);
    CopulaModel m2 = fit_copula(missing.table, 8);
    DataTable sample = sample_copula(m2, 4000, true);
    std::size_t hgb = missing.table.col_index("HGB");
    double rate = static_cast<double>(sample.n_missing(hgb)) / 4000.0;
    CHECK(rate == doctest::Approx(m2.missing_rate[hgb]).epsilon(0.25));
    DataTable no_mask = sample_copula(m2, 4000, false);
    CHECK_FALSE(no_mask.has_missing());
  }

  SUBCASE("samples respect the training ranges and pass validation") {
    DataTable sample = sample_copula(model, 500, false);
    ValidationReport report = validate(sample);
    CHECK(report.count(ViolationKind::kOutOfRange) == 0);
    CHECK(report.count(ViolationKind::kInvalidCategoryCode) == 0);
    ingest::FilterResult filtered = ingest::filter_implausible(sample);
    // Generation does not enforce the pressure rule; the post-filter does.
    CHECK(filtered.table.n_rows() + filtered.dropped_rows.size() == 500);
  }
}

TEST_CASE("equalizer quantile mapping") {
  Rng rng(23);
  std::vector<double> reference(800);
  for (auto& v : reference) v = 100.0 + 30.0 * rng.normal();

  QuantileMap map = fit_equalizer(reference);

  SUBCASE("degenerate reference is rejected") {
    CHECK_THROWS_AS(fit_equalizer(std::vector<double>{5.0, 5.0}), Error);
    CHECK_THROWS_AS(fit_equalizer(std::vector<double>{}), Error);
  }

  SUBCASE("constant input maps to the reference median") {
    std::vector<double> constant(13, 42.0);
    std::vector<double> out = apply_equalizer(map, constant);
    double med = median(reference);
    for (double v : out) CHECK(v == doctest::Approx(med).epsilon(1e-12));
  }

  SUBCASE("output matches the reference distribution (KS bound)") {
    std::vector<double> input(800);
    for (auto& v : input) v = rng.uniform01() * 7.0;  // very different shape
    std::vector<double> out = apply_equalizer(map, input);
    double ks = ks_statistic(out, reference);
    CHECK(ks <= 1.36 * std::sqrt(2.0 / 800.0));
  }

  SUBCASE("rank order is preserved exactly") {
    std::vector<double> input(200);
    for (auto& v : input) v = rng.normal();
    std::vector<double> out = apply_equalizer(map, input);
    for (std::size_t i = 0; i < input.size(); ++i)
      for (std::size_t j = 0; j < input.size(); ++j)
        if (input[i] < input[j]) CHECK(out[i] <= out[j]);
  }

  SUBCASE("identical distribution is close to a fixed point") {
    std::vector<double> out = apply_equalizer(map, reference);
    // Error bounded by one inter-order-statistic gap.
    std::vector<double> sorted = reference;
    std::sort(sorted.begin(), sorted.end());
    double max_gap = 0.0;
    for (std::size_t i = 1; i < sorted.size(); ++i)
      max_gap = std::max(max_gap, sorted[i] - sorted[i - 1]);
    for (std::size_t i = 0; i < reference.size(); ++i)
      CHECK(std::fabs(out[i] - reference[i]) <= max_gap + 1e-12);
  }
}

TEST_CASE("equalize_column touches only the target column") {
  testsupport::HfSimulation sim = testsupport::simulate_hf_table(300, 6, true);
  testsupport::HfSimulation ref = testsupport::simulate_hf_table(300, 7, false);
  std::size_t days = ref.table.col_index("Days");
  QuantileMap map = fit_equalizer(ref.table.observed(days));

  DataTable out = equalize_column(sim.table, "Days", map);
  for (std::size_t c = 0; c < sim.table.n_columns(); ++c) {
    if (c == days) continue;
    for (std::size_t r = 0; r < sim.table.n_rows(); ++r) {
      CHECK(out.is_missing(c, r) == sim.table.is_missing(c, r));
      if (!out.is_missing(c, r))
        CHECK(out.value(c, r) == sim.table.value(c, r));
    }
  }
  // The event indicator in particular is untouched.
  std::size_t dead = sim.table.col_index("dead");
  for (std::size_t r = 0; r < sim.table.n_rows(); ++r)
    CHECK(out.value(dead, r) == sim.table.value(dead, r));

  SUBCASE("non-continuous target is rejected") {
    CHECK_THROWS_AS(equalize_column(sim.table, "dead", map), Error);
  }
}
