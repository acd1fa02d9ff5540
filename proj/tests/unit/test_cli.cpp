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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support/sim.hpp"
#include "survaudit/cli/app.hpp"
#include "survaudit/ingest/schema_config.hpp"
#include "survaudit/ingest/table_io.hpp"

using namespace survaudit;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(SURVAUDIT_BIN) + " " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("survaudit_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("help output enumerates every flag the parser accepts") {
  cli::CliOptions options;
  std::unique_ptr<CLI::App> app = cli::make_app(options);

  auto check_app = [](const CLI::App* a) {
    std::string help = a->help();
    for (const CLI::Option* option : a->get_options()) {
      for (const std::string& lname : option->get_lnames())
        CHECK(help.find("--" + lname) != std::string::npos);
    }
  };
  check_app(app.get());
  for (const CLI::App* sub : app->get_subcommands({}))
    check_app(sub);
  CHECK(app->get_subcommands({}).size() == 5);
}

TEST_CASE("CLI round trip: generate, equalize, split, impute, audit") {
  TempDir dir;
  fs::path schema_path = fs::path(SURVAUDIT_DATA_DIR) / "hf.schema";
  REQUIRE(fs::exists(schema_path));
  SchemaPtr schema = ingest::load_schema_config(schema_path.string());

  // Real table written through the same I/O the CLI uses.
  testsupport::HfSimulation sim = testsupport::simulate_hf_table(90, 7, true);
  fs::path real_csv = dir.path / "real.csv";
  ingest::write_table(real_csv.string(), sim.table);

  SUBCASE("generate produces the requested number of rows, reproducibly") {
    fs::path synth1 = dir.path / "s1.csv";
    fs::path synth2 = dir.path / "s2.csv";
    CHECK(run("generate --fit " + quoted(real_csv) + " --schema " +
              quoted(schema_path) + " --n 50 --seed 7 --out " +
              quoted(synth1)) == 0);
    CHECK(run("generate --fit " + quoted(real_csv) + " --schema " +
              quoted(schema_path) + " --n 50 --seed 7 --out " +
              quoted(synth2)) == 0);
    DataTable synth = ingest::load_table(synth1.string(), schema);
    CHECK(synth.n_rows() == 50);
    CHECK(slurp(synth1) == slurp(synth2));  // byte-for-byte
  }

  SUBCASE("equalize rewrites only the Days column") {
    fs::path synth = dir.path / "s.csv";
    REQUIRE(run("generate --fit " + quoted(real_csv) + " --schema " +
                quoted(schema_path) + " --n 60 --seed 3 --out " +
                quoted(synth)) == 0);
    fs::path eq = dir.path / "s_eq.csv";
    CHECK(run("equalize --col Days --schema " + quoted(schema_path) +
              " --reference " + quoted(real_csv) + " --in " + quoted(synth) +
              " --out " + quoted(eq)) == 0);
    DataTable before = ingest::load_table(synth.string(), schema);
    DataTable after = ingest::load_table(eq.string(), schema);
    std::size_t days = before.col_index("Days");
    bool days_changed = false;
    for (std::size_t c = 0; c < before.n_columns(); ++c) {
      for (std::size_t r = 0; r < before.n_rows(); ++r) {
        if (c == days) {
          days_changed |= before.value(c, r) != after.value(c, r);
        } else if (!before.is_missing(c, r)) {
          CHECK(before.value(c, r) == after.value(c, r));
        }
      }
    }
    CHECK(days_changed);
  }

  SUBCASE("split writes a 70/10/20 partition") {
    CHECK(run("split --seed 1 --schema " + quoted(schema_path) + " --in " +
              quoted(real_csv) + " --out-prefix " + quoted(dir.path / "r_")) ==
          0);
    DataTable train =
        ingest::load_table((dir.path / "r_train.csv").string(), schema);
    DataTable valid =
        ingest::load_table((dir.path / "r_valid.csv").string(), schema);
    DataTable test =
        ingest::load_table((dir.path / "r_test.csv").string(), schema);
    CHECK(train.n_rows() == 63);  // 70% of 90
    CHECK(valid.n_rows() == 9);
    CHECK(test.n_rows() == 18);
  }

  SUBCASE("impute fills every missing cell") {
    fs::path out = dir.path / "imputed.csv";
    CHECK(run("impute --method chained --schema " + quoted(schema_path) +
              " --in " + quoted(real_csv) + " --out " + quoted(out)) == 0);
    DataTable imputed = ingest::load_table(out.string(), schema);
    CHECK_FALSE(imputed.has_missing());
  }

  SUBCASE("audit writes a report and exits 0") {
    fs::path synth = dir.path / "s.csv";
    REQUIRE(run("generate --fit " + quoted(real_csv) + " --schema " +
                quoted(schema_path) + " --n 90 --seed 3 --out " +
                quoted(synth)) == 0);
    fs::path report_path = dir.path / "report.json";
    fs::path table_path = dir.path / "table.csv";
    CHECK(run("audit --real " + quoted(real_csv) + " --synth " + quoted(synth) +
              " --schema " + quoted(schema_path) + " --impute median --seed 9" +
              " --nnaa-iterations 3 --out " + quoted(report_path) +
              " --table-out " + quoted(table_path)) == 0);
    REQUIRE(fs::exists(report_path));
    harness::MetricReport report =
        harness::MetricReport::from_string(slurp(report_path));
    CHECK(report.data["synthetic"][0]["name"] == "s");
    CHECK(slurp(table_path).find("real,TRTR,") != std::string::npos);
  }

  SUBCASE("audit exits 2 on partial metric failure but still reports") {
    fs::path synth = dir.path / "tiny.csv";
    ingest::write_table(synth.string(), take_rows(sim.table, {0, 1, 2, 3, 4}));
    fs::path report_path = dir.path / "report2.json";
    CHECK(run("audit --real " + quoted(real_csv) + " --synth " + quoted(synth) +
              " --schema " + quoted(schema_path) + " --impute median --seed 9" +
              " --nnaa-iterations 3 --out " + quoted(report_path)) == 2);
    REQUIRE(fs::exists(report_path));
    harness::MetricReport report =
        harness::MetricReport::from_string(slurp(report_path));
    CHECK(report.has_failures);
  }

  SUBCASE("missing schema file exits 1 without a report") {
    fs::path report_path = dir.path / "never.json";
    CHECK(run("audit --real " + quoted(real_csv) +
              " --synth " + quoted(real_csv) + " --schema /nonexistent.schema" +
              " --out " + quoted(report_path)) == 1);
    CHECK_FALSE(fs::exists(report_path));
  }

  SUBCASE("unknown flags exit 1") {
    CHECK(run("audit --real " + quoted(real_csv) + " --frobnicate") == 1);
  }
}
