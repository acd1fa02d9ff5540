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

#include "survaudit/cli/app.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "survaudit/generate/copula.hpp"
#include "survaudit/generate/equalize.hpp"
#include "survaudit/harness/split.hpp"
#include "survaudit/ingest/schema_config.hpp"
#include "survaudit/ingest/table_io.hpp"

namespace survaudit::cli {

namespace {

std::string dataset_name(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int cmd_audit(const CliOptions& opt) {
  SchemaPtr schema = ingest::load_schema_config(opt.schema_path);
  DataTable real = ingest::load_table(opt.real_path, schema);
  std::vector<std::pair<std::string, DataTable>> synths;
  for (const std::string& path : opt.synth_paths)
    synths.emplace_back(dataset_name(path), ingest::load_table(path, schema));

  harness::AuditConfig config;
  config.seed = opt.seed;
  config.impute_method = impute::parse_method(opt.impute_method);
  config.equalize_time = opt.equalize;
  config.mia_folds = opt.mia_folds;
  config.aia_folds = opt.aia_folds;
  config.nnaa_iterations = opt.nnaa_iterations;
  config.preclean = !opt.no_preclean;
  config.threads = opt.threads;

  harness::MetricReport report = harness::full_audit(real, synths, config);
  report.save(opt.out_path);
  if (!opt.table_out_path.empty()) {
    std::ofstream out(opt.table_out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + opt.table_out_path + "'");
    out << harness::utility_table_csv(report);
  }
  if (opt.verbose)
    std::cerr << "report written to " << opt.out_path << "\n";
  if (report.has_failures) {
    std::cerr << "audit completed with "
              << report.data["failures"].size()
              << " failed section(s); see the report for details\n";
    return 2;
  }
  return 0;
}

int cmd_impute(const CliOptions& opt) {
  SchemaPtr schema = ingest::load_schema_config(opt.schema_path);
  DataTable table = ingest::load_table(opt.in_path, schema);
  impute::ImputeConfig cfg;
  cfg.method = impute::parse_method(opt.impute_method);
  cfg.seed = opt.seed;
  DataTable out = cfg.method == impute::ImputeMethod::kMedian
                      ? impute::impute_median(table)
                      : impute::impute_chained(table, cfg).table;
  ingest::write_table(opt.out_path, out);
  return 0;
}

int cmd_generate(const CliOptions& opt) {
  SchemaPtr schema = ingest::load_schema_config(opt.schema_path);
  DataTable train = ingest::load_table(opt.fit_path, schema);
  gen::CopulaModel model = gen::fit_copula(train, opt.seed);
  DataTable sample = gen::sample_copula(model, opt.n_samples,
                                        opt.with_missingness);
  ingest::write_table(opt.out_path, sample);
  return 0;
}

int cmd_equalize(const CliOptions& opt) {
  SchemaPtr schema = ingest::load_schema_config(opt.schema_path);
  DataTable reference = ingest::load_table(opt.reference_path, schema);
  DataTable input = ingest::load_table(opt.in_path, schema);
  std::size_t col = reference.col_index(opt.column);
  gen::QuantileMap map = gen::fit_equalizer(reference.observed(col));
  ingest::write_table(opt.out_path, gen::equalize_column(input, opt.column, map));
  return 0;
}

int cmd_split(const CliOptions& opt) {
  SchemaPtr schema = ingest::load_schema_config(opt.schema_path);
  DataTable table = ingest::load_table(opt.in_path, schema);
  harness::SplitPlan plan = harness::stratified_split(table, opt.seed);
  ingest::write_table(opt.out_prefix + "train.csv", take_rows(table, plan.train));
  ingest::write_table(opt.out_prefix + "valid.csv", take_rows(table, plan.valid));
  ingest::write_table(opt.out_prefix + "test.csv", take_rows(table, plan.test));
  return 0;
}

}  // namespace

std::unique_ptr<CLI::App> make_app(CliOptions& opt) {
  auto app = std::make_unique<CLI::App>(
      "survaudit: fidelity, utility and privacy audits of synthetic "
      "survival datasets");
  app->require_subcommand(1);
  app->add_option("--threads", opt.threads,
                  "internal parallelism cap (default 1)")
      ->envname("SURVAUDIT_THREADS");
  app->add_flag("-v,--verbose", opt.verbose, "chattier progress output");

  CLI::App* audit = app->add_subcommand(
      "audit", "run the full audit battery against a real reference table");
  audit->add_option("--real", opt.real_path, "real reference table (CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  audit->add_option("--synth", opt.synth_paths,
                    "synthetic candidate table(s) (CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  audit->add_option("--schema", opt.schema_path, "schema config file")
      ->required()
      ->check(CLI::ExistingFile);
  audit->add_option("--out", opt.out_path, "report output path (JSON)")
      ->required();
  audit->add_option("--table-out", opt.table_out_path,
                    "also write the flat utility table (CSV)");
  audit->add_option("--impute", opt.impute_method,
                    "imputation method: median|chained (default chained)")
      ->check(CLI::IsMember({"median", "chained"}));
  audit->add_flag("--equalize", opt.equalize,
                  "histogram-equalize the time column of each synthetic "
                  "dataset to the real training data first");
  audit->add_option("--seed", opt.seed, "root seed (default 1729)");
  audit->add_option("--mia-folds", opt.mia_folds,
                    "membership-inference folds (default 4)");
  audit->add_option("--aia-folds", opt.aia_folds,
                    "attribute-inference folds (default 5)");
  audit->add_option("--nnaa-iterations", opt.nnaa_iterations,
                    "NNAA resampling iterations (default 30)");
  audit->add_flag("--no-preclean", opt.no_preclean,
                  "skip range clipping (real) and implausible-row filtering "
                  "(synthetic) before evaluating");

  CLI::App* imp = app->add_subcommand("impute",
                                      "fill missing cells in one table");
  imp->add_option("--schema", opt.schema_path, "schema config file")
      ->required()
      ->check(CLI::ExistingFile);
  imp->add_option("--in", opt.in_path, "input table (CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  imp->add_option("--out", opt.out_path, "output table path")->required();
  imp->add_option("--method", opt.impute_method,
                  "median|chained (default chained)")
      ->check(CLI::IsMember({"median", "chained"}));
  imp->add_option("--seed", opt.seed, "root seed (default 1729)");

  CLI::App* generate = app->add_subcommand(
      "generate", "fit the copula baseline generator and sample a table");
  generate->add_option("--fit", opt.fit_path, "training table (CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  generate->add_option("--schema", opt.schema_path, "schema config file")
      ->required()
      ->check(CLI::ExistingFile);
  generate->add_option("--n", opt.n_samples, "rows to sample")->required();
  generate->add_option("--seed", opt.seed, "root seed (default 1729)");
  generate->add_flag("--with-missingness", opt.with_missingness,
                     "reintroduce per-column missingness at the training "
                     "rates");
  generate->add_option("--out", opt.out_path, "output table path")->required();

  CLI::App* equalize = app->add_subcommand(
      "equalize",
      "quantile-map one continuous column onto a reference distribution");
  equalize->add_option("--schema", opt.schema_path, "schema config file")
      ->required()
      ->check(CLI::ExistingFile);
  equalize->add_option("--col", opt.column,
                       "column to equalize (default Days)");
  equalize->add_option("--reference", opt.reference_path,
                       "reference table (CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  equalize->add_option("--in", opt.in_path, "input table (CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  equalize->add_option("--out", opt.out_path, "output table path")->required();

  CLI::App* split = app->add_subcommand(
      "split", "write the stratified 70/10/20 train/valid/test partition");
  split->add_option("--schema", opt.schema_path, "schema config file")
      ->required()
      ->check(CLI::ExistingFile);
  split->add_option("--in", opt.in_path, "input table (CSV)")
      ->required()
      ->check(CLI::ExistingFile);
  split->add_option("--seed", opt.seed, "root seed (default 1729)");
  split->add_option("--out-prefix", opt.out_prefix,
                    "prefix for the train/valid/test output files")
      ->required();
  return app;
}

int run_cli(int argc, const char* const* argv) {
  CliOptions opt;
  std::unique_ptr<CLI::App> app = make_app(opt);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app->exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    if (app->got_subcommand("audit")) return cmd_audit(opt);
    if (app->got_subcommand("impute")) return cmd_impute(opt);
    if (app->got_subcommand("generate")) return cmd_generate(opt);
    if (app->got_subcommand("equalize")) return cmd_equalize(opt);
    if (app->got_subcommand("split")) return cmd_split(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace survaudit::cli
