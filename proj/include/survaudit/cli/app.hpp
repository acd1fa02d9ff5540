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

#ifndef SURVAUDIT_CLI_APP_HPP
#define SURVAUDIT_CLI_APP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "survaudit/harness/audit.hpp"

namespace survaudit::cli {

/// Parsed command-line state shared by all subcommands.
struct CliOptions {
  // global
  std::size_t threads = 1;
  bool verbose = false;

  // audit
  std::string real_path;
  std::vector<std::string> synth_paths;
  std::string schema_path;
  std::string out_path;
  std::string table_out_path;
  std::string impute_method = "chained";
  bool equalize = false;
  bool no_preclean = false;
  std::uint64_t seed = harness::kDefaultSeed;
  std::size_t mia_folds = 4;
  std::size_t aia_folds = 5;
  std::size_t nnaa_iterations = 30;

  // impute / equalize / split inputs
  std::string in_path;

  // generate
  std::string fit_path;
  std::size_t n_samples = 0;
  bool with_missingness = false;

  // equalize
  std::string column = "Days";
  std::string reference_path;

  // split
  std::string out_prefix;
};

/// Builds the CLI11 application; exposed so tests can compare the parser's
/// option inventory against the rendered help text.
std::unique_ptr<CLI::App> make_app(CliOptions& options);

/// Exit codes: 0 success, 1 configuration/input error, 2 partial metric
/// failure (the report is still written).
int run_cli(int argc, const char* const* argv);

}  // namespace survaudit::cli

#endif  // SURVAUDIT_CLI_APP_HPP
