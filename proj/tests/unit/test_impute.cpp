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

#include "support/sim.hpp"
#include "survaudit/impute/impute.hpp"
#include "survaudit/util/rng.hpp"

using namespace survaudit;
using namespace survaudit::impute;

namespace {

// One continuous feature x0, one binary b0, outcomes.
DataTable four_col_table(std::size_t n) {
  return DataTable(testsupport::small_schema(1, 1), n);
}

}  // namespace

TEST_CASE("impute_median fills median and lowest-tie mode") {
  DataTable t = four_col_table(4);
  // x0: {1, _, 3, 5}; b0: {1, 1, 0, _}
  t.set(0, 0, 1.0);
  t.set_missing(0, 1);
  t.set(0, 2, 3.0);
  t.set(0, 3, 5.0);
  t.set(1, 0, 1.0);
  t.set(1, 1, 1.0);
  t.set(1, 2, 0.0);
  t.set_missing(1, 3);
  for (std::size_t r = 0; r < 4; ++r) {
    t.set(2, r, 1.0 + static_cast<double>(r));
    t.set(3, r, 1.0);
  }

  DataTable out = impute_median(t);
  CHECK(out.value(0, 1) == 3.0);  // median of {1,3,5}
  CHECK(out.value(1, 3) == 1.0);  // mode
  CHECK_FALSE(out.has_missing());
  // Observed cells untouched.
  CHECK(out.value(0, 0) == 1.0);

  SUBCASE("mode ties resolve to the lowest code") {
    DataTable u = four_col_table(3);
    u.set(0, 0, 1.0);
    u.set(0, 1, 1.0);
    u.set(0, 2, 1.0);
    u.set(1, 0, 0.0);
    u.set(1, 1, 1.0);
    u.set_missing(1, 2);
    for (std::size_t r = 0; r < 3; ++r) {
      u.set(2, r, 1.0);
      u.set(3, r, 0.0);
    }
    CHECK(impute_median(u).value(1, 2) == 0.0);
  }

  SUBCASE("no missing is the identity") {
    DataTable out2 = impute_median(out);
    CHECK(content_hash(out2) == content_hash(out));
  }

  SUBCASE("fully-missing column errors") {
    DataTable u = four_col_table(2);
    u.set_missing(0, 0);
    u.set_missing(0, 1);
    u.set(1, 0, 0.0);
    u.set(1, 1, 1.0);
    u.set(2, 0, 1.0);
    u.set(2, 1, 2.0);
    u.set(3, 0, 1.0);
    u.set(3, 1, 0.0);
    CHECK_THROWS_AS(impute_median(u), Error);
  }
}

TEST_CASE("impute_chained recovers an exact linear relation") {
  // y = 2x + 1 exactly; one y missing. The least-squares fit is exact, so
  // the imputed cell must match the line.
  auto schema = testsupport::small_schema(2, 0);
  DataTable t(schema, 6);
  const double xs[] = {0, 1, 2, 3, 4, 5};
  for (std::size_t r = 0; r < 6; ++r) {
    t.set(0, r, xs[r]);
    t.set(1, r, 2.0 * xs[r] + 1.0);
    t.set(2, r, 1.0 + static_cast<double>(r));
    t.set(3, r, r % 2 ? 1.0 : 0.0);
  }
  t.set_missing(1, 3);  // true value 7

  ImputeConfig cfg;
  ChainedResult result = impute_chained(t, cfg);
  CHECK(result.converged);
  CHECK(result.table.value(1, 3) == doctest::Approx(7.0).epsilon(1e-6));
  // Observed cells are never modified.
  CHECK(result.table.value(1, 0) == 1.0);
  CHECK(result.table.value(0, 3) == 3.0);
}

TEST_CASE("impute_chained configuration contract") {
  testsupport::HfSimulation sim = testsupport::simulate_hf_table(80, 3, true);
  ImputeConfig cfg;

  SUBCASE("no missing converges in one iteration") {
    testsupport::HfSimulation clean =
        testsupport::simulate_hf_table(30, 3, false);
    ChainedResult result = impute_chained(clean.table, cfg);
    CHECK(result.converged);
    CHECK(result.iterations == 1);
    CHECK(content_hash(result.table) == content_hash(clean.table));
  }

  SUBCASE("max_iterations=1 with a tight tolerance does not converge") {
    cfg.max_iterations = 1;
    cfg.convergence_tol = 1e-12;
    ChainedResult result = impute_chained(sim.table, cfg);
    CHECK_FALSE(result.converged);
    CHECK(result.iterations == 1);
  }

  SUBCASE("max_iterations=0 is rejected") {
    cfg.max_iterations = 0;
    CHECK_THROWS_AS(impute_chained(sim.table, cfg), Error);
    cfg.max_iterations = 10;
    cfg.convergence_tol = 0.0;
    CHECK_THROWS_AS(impute_chained(sim.table, cfg), Error);
  }

  SUBCASE("huge tolerance reduces to the initialization fill") {
    cfg.convergence_tol = 1e12;
    ChainedResult result = impute_chained(sim.table, cfg);
    CHECK(result.converged);
    CHECK(result.iterations == 1);
    CHECK(content_hash(result.table) ==
          content_hash(impute_median(sim.table)));
  }

  SUBCASE("determinism") {
    ChainedResult a = impute_chained(sim.table, cfg);
    ChainedResult b = impute_chained(sim.table, cfg);
    CHECK(content_hash(a.table) == content_hash(b.table));
  }

  SUBCASE("observed cells never modified") {
    ChainedResult result = impute_chained(sim.table, cfg);
    for (std::size_t c = 0; c < sim.table.n_columns(); ++c)
      for (std::size_t r = 0; r < sim.table.n_rows(); ++r)
        if (!sim.table.is_missing(c, r))
          CHECK(result.table.value(c, r) == sim.table.value(c, r));
    CHECK_FALSE(result.table.has_missing());
  }
}

TEST_CASE("fit_imputer freezes statistics; apply never refits") {
  auto schema = testsupport::small_schema(1, 0);
  DataTable train(schema, 3);
  // Median of x0 on train is 2.
  for (std::size_t r = 0; r < 3; ++r) {
    train.set(0, r, static_cast<double>(r + 1));
    train.set(1, r, 1.0 + static_cast<double>(r));
    train.set(2, r, 1.0);
  }
  ImputeConfig cfg;
  cfg.method = ImputeMethod::kMedian;
  ImputerModel model = fit_imputer(train, cfg);

  DataTable test(schema, 2);
  test.set(0, 0, 100.0);
  test.set_missing(0, 1);
  test.set(1, 0, 5.0);
  test.set(1, 1, 6.0);
  test.set(2, 0, 1.0);
  test.set(2, 1, 0.0);
  DataTable out = apply_imputer(model, test);
  CHECK(out.value(0, 1) == 2.0);  // frozen train median, not test's 100

  SUBCASE("apply to a complete table is the identity") {
    DataTable complete = apply_imputer(model, out);
    CHECK(content_hash(complete) == content_hash(out));
  }
}

TEST_CASE("chained imputer model is deterministic across applications") {
  testsupport::HfSimulation sim = testsupport::simulate_hf_table(120, 9, true);
  ImputeConfig cfg;
  cfg.max_iterations = 20;
  ImputerModel model = fit_imputer(sim.table, cfg);
  testsupport::HfSimulation other = testsupport::simulate_hf_table(40, 10, true);
  DataTable a = apply_imputer(model, other.table);
  DataTable b = apply_imputer(model, other.table);
  CHECK(content_hash(a) == content_hash(b));
  CHECK_FALSE(a.has_missing());
}
