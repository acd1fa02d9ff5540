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
#include "survaudit/core/normalize.hpp"
#include "survaudit/core/validate.hpp"
#include "survaudit/util/rng.hpp"

using namespace survaudit;

namespace {

SchemaPtr tiny_schema() {
  std::vector<ColumnSpec> columns;
  ColumnSpec sbp;
  sbp.name = "SBP";
  sbp.kind = ColumnKind::kContinuous;
  sbp.plausible_min = 40;
  sbp.plausible_max = 250;
  columns.push_back(sbp);
  ColumnSpec type;
  type.name = "type";
  type.kind = ColumnKind::kCategorical;
  type.categories = {"a", "b", "c"};
  columns.push_back(type);
  ColumnSpec time;
  time.name = "time";
  time.kind = ColumnKind::kContinuous;
  time.role = ColumnRole::kTime;
  columns.push_back(time);
  ColumnSpec event;
  event.name = "event";
  event.kind = ColumnKind::kBinary;
  event.role = ColumnRole::kEvent;
  columns.push_back(event);
  return std::make_shared<DatasetSchema>(std::move(columns),
                                         std::vector<std::string>{});
}

}  // namespace

TEST_CASE("schema invariants are enforced") {
  ColumnSpec time;
  time.name = "t";
  time.kind = ColumnKind::kContinuous;
  time.role = ColumnRole::kTime;
  ColumnSpec event;
  event.name = "e";
  event.kind = ColumnKind::kBinary;
  event.role = ColumnRole::kEvent;

  SUBCASE("duplicate names") {
    ColumnSpec dup = time;
    CHECK_THROWS_AS(DatasetSchema({time, dup, event}, {}), Error);
  }
  SUBCASE("missing outcome roles") {
    ColumnSpec x;
    x.name = "x";
    CHECK_THROWS_AS(DatasetSchema({x, time}, {}), Error);
    CHECK_THROWS_AS(DatasetSchema({x, event}, {}), Error);
  }
  SUBCASE("binary categories are forced to 0/1") {
    ColumnSpec b;
    b.name = "b";
    b.kind = ColumnKind::kBinary;
    DatasetSchema schema({b, time, event}, {});
    CHECK(schema.column(0).categories == std::vector<std::string>{"0", "1"});
    b.categories = {"no", "yes"};
    CHECK_THROWS_AS(DatasetSchema({b, time, event}, {}), Error);
  }
  SUBCASE("inverted range") {
    ColumnSpec x;
    x.name = "x";
    x.plausible_min = 5;
    x.plausible_max = 2;
    CHECK_THROWS_AS(DatasetSchema({x, time, event}, {}), Error);
  }
  SUBCASE("unknown quasi-identifier") {
    ColumnSpec x;
    x.name = "x";
    CHECK_THROWS_AS(DatasetSchema({x, time, event}, {"ghost"}), Error);
  }
  SUBCASE("quasi-identifier role implies membership") {
    ColumnSpec x;
    x.name = "x";
    x.role = ColumnRole::kQuasiIdentifierFeature;
    DatasetSchema schema({x, time, event}, {});
    CHECK(schema.is_quasi_identifier("x"));
  }
}

TEST_CASE("validate reports range, code and outcome violations") {
  SchemaPtr schema = tiny_schema();
  DataTable table(schema, 3);
  for (std::size_t r = 0; r < 3; ++r) {
    table.set(0, r, 120.0);
    table.set(1, r, 1.0);
    table.set(2, r, 10.0 + static_cast<double>(r));
    table.set(3, r, 1.0);
  }
  CHECK(validate(table).ok());

  table.set(0, 1, 300.0);  // above max 250
  table.set(1, 2, 3.0);    // invalid code for 3 categories
  table.set_missing(2, 0); // missing time
  ValidationReport report = validate(table);
  CHECK(report.violations.size() == 3);
  CHECK(report.count(ViolationKind::kOutOfRange) == 1);
  CHECK(report.count(ViolationKind::kInvalidCategoryCode) == 1);
  CHECK(report.count(ViolationKind::kMissingOutcome) == 1);
  CHECK(report.violations[0].column == "SBP");
}

TEST_CASE("fit_normalization pools tables and handles degeneracy") {
  SchemaPtr schema = testsupport::small_schema(1, 0);
  DataTable a(schema, 2);
  a.set(0, 0, 0.0);
  a.set(0, 1, 2.0);
  a.set(1, 0, 1.0);
  a.set(1, 1, 2.0);
  a.set(2, 0, 1.0);
  a.set(2, 1, 0.0);
  DataTable b(schema, 1);
  b.set(0, 0, 4.0);
  b.set(1, 0, 3.0);
  b.set(2, 0, 1.0);

  NormalizationParams mm =
      fit_normalization({&a, &b}, NormalizationMode::kMinMax);
  CHECK(mm.stat_a[0] == 0.0);
  CHECK(mm.stat_b[0] == 4.0);
  DataTable norm = apply_normalization(b, mm);
  CHECK(norm.value(0, 0) == doctest::Approx(1.0));  // max maps to 1

  SUBCASE("degenerate z-score maps to zero") {
    DataTable c(schema, 3);
    for (std::size_t r = 0; r < 3; ++r) {
      c.set(0, r, 1.0);
      c.set(1, r, 1.0);
      c.set(2, r, 1.0);
    }
    NormalizationParams z = fit_normalization(c, NormalizationMode::kZScore);
    CHECK(z.is_degenerate(0));
    CHECK(apply_normalization(c, z).value(0, 0) == 0.0);
  }

  SUBCASE("z-score arithmetic") {
    NormalizationParams z;
    z.mode = NormalizationMode::kZScore;
    z.stat_a = {5.0, 0.0, 0.0};
    z.stat_b = {2.0, 1.0, 1.0};
    z.degenerate = {0, 0, 0};
    DataTable c(schema, 1);
    c.set(0, 0, 7.0);
    c.set(1, 0, 1.0);
    c.set(2, 0, 1.0);
    CHECK(apply_normalization(c, z).value(0, 0) == doctest::Approx(1.0));
  }

  SUBCASE("masked cells stay masked and untouched") {
    DataTable c(schema, 2);
    c.set(0, 0, 1.0);
    c.set_missing(0, 1);
    c.set(1, 0, 1.0);
    c.set(1, 1, 2.0);
    c.set(2, 0, 1.0);
    c.set(2, 1, 0.0);
    NormalizationParams p = fit_normalization(c, NormalizationMode::kMinMax);
    DataTable out = apply_normalization(c, p);
    CHECK(out.is_missing(0, 1));
  }

  SUBCASE("empty pooled column errors with the column name") {
    DataTable c(schema, 1);
    c.set_missing(0, 0);
    c.set(1, 0, 1.0);
    c.set(2, 0, 1.0);
    CHECK_THROWS_WITH_AS(fit_normalization(c, NormalizationMode::kMinMax),
                         doctest::Contains("x0"), Error);
  }
}

TEST_CASE("normalization properties: self-fit, inversion, permutation") {
  Rng rng(7);
  SchemaPtr schema = testsupport::small_schema(2, 0);
  DataTable table(schema, 50);
  for (std::size_t r = 0; r < 50; ++r) {
    table.set(0, r, rng.normal() * 3.0 + 1.0);
    table.set(1, r, rng.uniform01() * 10.0);
    table.set(2, r, 1.0 + rng.uniform01());
    table.set(3, r, rng.bernoulli(0.5) ? 1.0 : 0.0);
  }

  for (NormalizationMode mode :
       {NormalizationMode::kMinMax, NormalizationMode::kZScore}) {
    NormalizationParams params = fit_normalization(table, mode);
    DataTable out = apply_normalization(table, params);

    // Self-fit lands on the canonical scale.
    NormalizationParams check = fit_normalization(out, mode);
    if (mode == NormalizationMode::kMinMax) {
      CHECK(check.stat_a[0] == doctest::Approx(0.0).epsilon(1e-9));
      CHECK(check.stat_b[0] == doctest::Approx(1.0).epsilon(1e-9));
    } else {
      CHECK(check.stat_a[0] == doctest::Approx(0.0).epsilon(1e-9));
      CHECK(check.stat_b[0] == doctest::Approx(1.0).epsilon(1e-9));
    }

    // Round trip.
    DataTable back = invert_normalization(out, params);
    for (std::size_t r = 0; r < 50; ++r)
      CHECK(back.value(0, r) == doctest::Approx(table.value(0, r)).epsilon(1e-9));

    // Permutation invariance of the fit.
    std::vector<std::size_t> perm(50);
    for (std::size_t i = 0; i < 50; ++i) perm[i] = i;
    Rng(3).shuffle(perm);
    NormalizationParams shuffled =
        fit_normalization(take_rows(table, perm), mode);
    CHECK(shuffled.stat_a[0] == doctest::Approx(params.stat_a[0]).epsilon(1e-12));
    CHECK(shuffled.stat_b[0] == doctest::Approx(params.stat_b[0]).epsilon(1e-12));
  }
}

TEST_CASE("content_hash is order-sensitive and value-sensitive") {
  SchemaPtr schema = testsupport::small_schema(1, 0);
  DataTable a(schema, 2);
  a.set(0, 0, 1.0);
  a.set(0, 1, 2.0);
  a.set(1, 0, 1.0);
  a.set(1, 1, 2.0);
  a.set(2, 0, 1.0);
  a.set(2, 1, 0.0);
  DataTable b = a;
  CHECK(content_hash(a) == content_hash(b));
  b.set(0, 0, 1.5);
  CHECK(content_hash(a) != content_hash(b));
}
