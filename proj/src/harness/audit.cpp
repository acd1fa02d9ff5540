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

#include "survaudit/harness/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <thread>

#include "survaudit/core/validate.hpp"
#include "survaudit/fidelity/fidelity.hpp"
#include "survaudit/fidelity/km_compare.hpp"
#include "survaudit/fidelity/preservation.hpp"
#include "survaudit/fidelity/significance.hpp"
#include "survaudit/generate/equalize.hpp"
#include "survaudit/harness/paradigm.hpp"
#include "survaudit/harness/split.hpp"
#include "survaudit/ingest/constraints.hpp"
#include "survaudit/ingest/missingness.hpp"
#include "survaudit/privacy/privacy.hpp"
#include "survaudit/survival/kaplan_meier.hpp"
#include "survaudit/util/rng.hpp"

namespace survaudit::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string hash_hex(const DataTable& table) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(content_hash(table)));
  return buf;
}

surv::KMCurve km_of_table(const DataTable& table) {
  std::size_t tc = table.schema().time_index();
  std::size_t ec = table.schema().event_index();
  std::vector<double> times;
  std::vector<int> events;
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    if (table.is_missing(tc, r) || table.is_missing(ec, r))
      throw Error("km: missing outcome at row " + std::to_string(r));
    times.push_back(table.value(tc, r));
    events.push_back(static_cast<int>(table.value(ec, r)));
  }
  return surv::kaplan_meier(times, events);
}

ordered_json missingness_json(const DataTable& table) {
  ordered_json out;
  ingest::MissingnessProfile profile = ingest::missingness_profile(table);
  for (std::size_t i = 0; i < profile.columns.size(); ++i)
    out[profile.columns[i]] = profile.fraction[i];
  return out;
}

ordered_json histogram_json(const DataTable& real, const DataTable& synth) {
  constexpr std::size_t kBins = 20;
  ordered_json out;
  const DatasetSchema& schema = real.schema();
  for (std::size_t c = 0; c < schema.n_columns(); ++c) {
    const ColumnSpec& spec = schema.column(c);
    std::vector<double> a = real.observed(c);
    std::vector<double> b = synth.observed(c);
    if (a.empty() || b.empty()) continue;
    ordered_json entry;
    if (spec.is_continuous()) {
      double lo = std::min(*std::min_element(a.begin(), a.end()),
                           *std::min_element(b.begin(), b.end()));
      double hi = std::max(*std::max_element(a.begin(), a.end()),
                           *std::max_element(b.begin(), b.end()));
      if (hi <= lo) hi = lo + 1.0;
      auto fill = [&](const std::vector<double>& v) {
        std::vector<std::size_t> bins(kBins, 0);
        for (double x : v) {
          auto k = static_cast<std::size_t>((x - lo) / (hi - lo) *
                                            static_cast<double>(kBins));
          if (k >= kBins) k = kBins - 1;
          ++bins[k];
        }
        return bins;
      };
      entry["min"] = lo;
      entry["max"] = hi;
      entry["real"] = fill(a);
      entry["synthetic"] = fill(b);
    } else {
      auto freq = [&](const std::vector<double>& v) {
        std::vector<std::size_t> counts(spec.n_categories(), 0);
        for (double x : v) ++counts[static_cast<std::size_t>(x)];
        return counts;
      };
      entry["categories"] = spec.categories;
      entry["real"] = freq(a);
      entry["synthetic"] = freq(b);
    }
    out[spec.name] = std::move(entry);
  }
  return out;
}

ordered_json significance_json(const DataTable& real, const DataTable& synth) {
  ordered_json out;
  ordered_json columns = ordered_json::array();
  std::size_t n_differ = 0;
  for (const fidelity::ColumnTests& col :
       fidelity::significance_battery(real, synth)) {
    ordered_json tests = ordered_json::array();
    bool differs = false;
    for (const fidelity::TestResult& t : col.tests) {
      ordered_json entry;
      entry["test"] = t.test;
      entry["testable"] = t.testable;
      if (t.testable) {
        entry["statistic"] = t.statistic;
        entry["p_value"] = t.p_value;
        entry["differs"] = t.differs;
        differs = differs || t.differs;
      } else {
        entry["note"] = t.note;
      }
      tests.push_back(std::move(entry));
    }
    n_differ += differs;
    ordered_json entry;
    entry["column"] = col.column;
    entry["tests"] = std::move(tests);
    columns.push_back(std::move(entry));
  }
  out["n_columns_differing"] = n_differ;
  out["columns"] = std::move(columns);
  return out;
}

ordered_json fidelity_json(const DataTable& real_imp,
                           const DataTable& synth_imp, const DataTable& real_raw,
                           const DataTable& synth_raw) {
  ordered_json out;
  fidelity::FidelityScores scores =
      fidelity::fidelity_scores(real_imp, synth_imp);
  out["dimension_wise_mean"] = scores.dimension_wise_mean;
  out["correlation_mean"] = scores.correlation_mean;
  ordered_json dims = ordered_json::array();
  for (const auto& d : scores.dimension_wise) {
    ordered_json entry;
    entry["column"] = d.column;
    entry["score"] = d.score;
    dims.push_back(std::move(entry));
  }
  out["dimension_wise"] = std::move(dims);
  ordered_json pairs = ordered_json::array();
  std::size_t skipped = 0;
  for (const auto& p : scores.correlation) {
    ordered_json entry;
    entry["columns"] = {p.column_i, p.column_j};
    if (p.skipped) {
      entry["skipped"] = p.reason;
      ++skipped;
    } else {
      entry["score"] = p.score;
    }
    pairs.push_back(std::move(entry));
  }
  out["n_correlation_pairs"] = scores.correlation.size() - skipped;
  out["n_skipped_pairs"] = skipped;
  out["correlation"] = std::move(pairs);
  out["missingness"] = ordered_json{{"real", missingness_json(real_raw)},
                                    {"synthetic", missingness_json(synth_raw)}};
  out["histograms"] = histogram_json(real_raw, synth_raw);
  return out;
}

ordered_json preservation_json(const DataTable& real_imp,
                               const DataTable& synth_imp) {
  fidelity::PreservationResult pres = fidelity::feature_preservation(
      surv::to_survival_data(real_imp), surv::to_survival_data(synth_imp));
  ordered_json out;
  out["true_positives"] = pres.true_positives;
  out["positives_real"] = pres.positives_real;
  out["positives_synth"] = pres.positives_synth;
  if (pres.recall_defined)
    out["recall"] = pres.recall;
  else
    out["recall"] = "undefined (no significant features in real data)";
  if (pres.precision_defined)
    out["precision"] = pres.precision;
  else
    out["precision"] = "undefined (no significant features in synthetic data)";
  ordered_json detail = ordered_json::array();
  for (const auto& d : pres.detail) {
    ordered_json entry;
    entry["feature"] = d.name;
    entry["real"] = ordered_json{{"estimable", d.real_fit.estimable},
                                 {"beta", d.real_fit.beta},
                                 {"p_value", d.real_fit.p_value}};
    entry["synthetic"] = ordered_json{{"estimable", d.synth_fit.estimable},
                                      {"beta", d.synth_fit.beta},
                                      {"p_value", d.synth_fit.p_value}};
    entry["preserved"] = d.preserved;
    detail.push_back(std::move(entry));
  }
  out["detail"] = std::move(detail);
  return out;
}

ordered_json paradigm_json(const ParadigmResult& r) {
  ordered_json out;
  out["c_index"] = r.c_index;
  out["ibs"] = r.ibs;
  out["chosen"] = r.chosen;
  out["validation_c_index"] = r.validation_c;
  if (r.ibs_weights_capped) out["ibs_weights_capped"] = true;
  return out;
}

ordered_json privacy_json(const DataTable& real_raw, const DataTable& synth_raw,
                          const DataTable& train_imp, const DataTable& test_imp,
                          const DataTable& synth_imp, const AuditConfig& config,
                          const std::string& name) {
  Rng root(config.seed);
  ordered_json out;

  privacy::ExactMatchResult em = privacy::exact_match(real_raw, synth_raw);
  out["exact_match_rate"] = em.rate;
  out["n_exact_matches"] = em.matches.size();

  privacy::MiaResult mia = privacy::mia_accuracy(
      train_imp, test_imp, synth_imp, config.mia_folds,
      root.stream("mia:" + name).root_seed());
  out["mia_accuracy"] = mia.accuracy;
  out["mia_fold_accuracy"] = mia.fold_accuracy;

  privacy::AiaResult aia = privacy::aia_scores(
      train_imp, test_imp, synth_imp, config.aia_folds,
      root.stream("aia:" + name).root_seed());
  out["aia_linear"] = aia.linear_score;
  out["aia_knn"] = aia.knn_score;
  out["aia_linear_baseline"] = aia.linear_baseline;
  out["aia_knn_baseline"] = aia.knn_baseline;
  ordered_json targets = ordered_json::array();
  for (const auto& d : aia.detail) {
    ordered_json entry;
    entry["target"] = d.target;
    entry["linear"] = d.linear_accuracy;
    entry["knn"] = d.knn_accuracy;
    entry["linear_baseline"] = d.linear_baseline;
    entry["knn_baseline"] = d.knn_baseline;
    if (d.degenerate) entry["degenerate"] = true;
    targets.push_back(std::move(entry));
  }
  out["aia_targets"] = std::move(targets);

  privacy::NnaaResult nn = privacy::nnaa(
      train_imp, test_imp, synth_imp, config.nnaa_iterations,
      root.stream("nnaa:" + name).root_seed());
  out["nnaa_train_synth"] = nn.nnaa_train_synth;
  out["nnaa_test_synth"] = nn.nnaa_test_synth;
  out["privacy_loss"] = nn.privacy_loss;
  return out;
}

void run_jobs(std::size_t n, std::size_t threads,
              const std::function<void(std::size_t)>& job) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::size_t workers = std::min(threads, n);
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        job(i);
    });
  }
  for (auto& t : pool) t.join();
}

DataTable impute_whole(const DataTable& table, const AuditConfig& config,
                       ordered_json* meta) {
  impute::ImputeConfig cfg;
  cfg.method = config.impute_method;
  cfg.seed = config.seed;
  if (config.impute_method == impute::ImputeMethod::kMedian) {
    if (meta) (*meta)["impute_method"] = "median";
    return impute::impute_median(table);
  }
  impute::ChainedResult result = impute::impute_chained(table, cfg);
  if (meta) {
    (*meta)["impute_method"] = "chained";
    (*meta)["impute_converged"] = result.converged;
    (*meta)["impute_iterations"] = result.iterations;
  }
  return result.table;
}

}  // namespace

MetricReport full_audit(
    const DataTable& real,
    const std::vector<std::pair<std::string, DataTable>>& synths,
    const AuditConfig& config) {
  MetricReport report;
  ordered_json& data = report.data;
  ordered_json failures = ordered_json::array();
  auto guard = [&](const std::string& section,
                   const std::function<ordered_json()>& fn) -> ordered_json {
    try {
      return fn();
    } catch (const std::exception& e) {
      failures.push_back(
          ordered_json{{"section", section}, {"error", e.what()}});
      return ordered_json{{"error", e.what()}};
    }
  };

  data["survaudit_version"] = "1.0.0";
  data["config"] =
      ordered_json{{"seed", config.seed},
                   {"impute_method", to_string(config.impute_method)},
                   {"equalize_time", config.equalize_time},
                   {"mia_folds", config.mia_folds},
                   {"aia_folds", config.aia_folds},
                   {"nnaa_iterations", config.nnaa_iterations},
                   {"preclean", config.preclean}};

  // Preclean: clip the real data, filter implausible synthetic rows.
  DataTable real_clean = real;
  ordered_json real_meta;
  real_meta["rows"] = real.n_rows();
  real_meta["hash"] = hash_hex(real);
  real_meta["validation_violations"] = validate(real).violations.size();
  if (config.preclean) {
    ingest::ClipResult clipped = ingest::clip_to_ranges(real);
    real_clean = std::move(clipped.table);
    real_meta["clipped_cells"] = clipped.total_clipped;
  }

  std::vector<DataTable> synth_clean;
  std::vector<ordered_json> synth_meta(synths.size());
  for (std::size_t i = 0; i < synths.size(); ++i) {
    const auto& [name, table] = synths[i];
    synth_meta[i]["name"] = name;
    synth_meta[i]["rows"] = table.n_rows();
    synth_meta[i]["hash"] = hash_hex(table);
    synth_meta[i]["validation_violations"] = validate(table).violations.size();
    if (config.preclean) {
      ingest::FilterResult filtered = ingest::filter_implausible(table);
      synth_meta[i]["filtered_rows"] = filtered.dropped_rows.size();
      synth_clean.push_back(std::move(filtered.table));
    } else {
      synth_clean.push_back(table);
    }
  }

  // The real split plan anchors imputation targets, the equalization
  // reference and the privacy member/non-member partition.
  SplitPlan plan = stratified_split(real_clean, config.seed);

  if (config.equalize_time) {
    std::size_t time_col = real_clean.schema().time_index();
    std::vector<double> reference;
    for (std::size_t r : plan.train_valid())
      if (!real_clean.is_missing(time_col, r))
        reference.push_back(real_clean.value(time_col, r));
    gen::QuantileMap map = gen::fit_equalizer(reference);
    const std::string& column = real_clean.schema().column(time_col).name;
    for (std::size_t i = 0; i < synth_clean.size(); ++i) {
      synth_clean[i] = gen::equalize_column(synth_clean[i], column, map);
      synth_meta[i]["equalized"] = column;
    }
  }

  // Uniform imputation for the fidelity/KM/preservation/privacy sections
  // (the utility paradigms re-impute per split inside run_paradigm).
  DataTable real_imp = real_clean;
  bool real_imputed = false;
  try {
    real_imp = impute_whole(real_clean, config, &real_meta);
    real_imputed = true;
  } catch (const std::exception& e) {
    failures.push_back(
        ordered_json{{"section", "impute:real"}, {"error", e.what()}});
    real_meta["imputation"] = ordered_json{{"error", e.what()}};
  }
  data["real"] = real_meta;

  // Utility cells: TRTR plus the three synthetic paradigms per dataset and
  // family. Results land in fixed slots so threading stays deterministic.
  struct Cell {
    std::size_t dataset;  // npos for TRTR
    Paradigm paradigm;
    ModelFamily family;
    ordered_json result;
  };
  constexpr std::size_t kReal = static_cast<std::size_t>(-1);
  std::vector<Cell> cells;
  for (ModelFamily family : {ModelFamily::kCox, ModelFamily::kRsf})
    cells.push_back({kReal, Paradigm::kTRTR, family, {}});
  for (std::size_t i = 0; i < synth_clean.size(); ++i)
    for (Paradigm paradigm :
         {Paradigm::kTSTR, Paradigm::kTRTS, Paradigm::kTSTS})
      for (ModelFamily family : {ModelFamily::kCox, ModelFamily::kRsf})
        cells.push_back({i, paradigm, family, {}});

  run_jobs(cells.size(), config.threads, [&](std::size_t k) {
    Cell& cell = cells[k];
    const DataTable& synth =
        cell.dataset == kReal ? real_clean : synth_clean[cell.dataset];
    try {
      ParadigmResult r = run_paradigm(real_clean, synth, cell.paradigm,
                                      cell.family, config.impute_method,
                                      config.seed);
      cell.result = paradigm_json(r);
    } catch (const std::exception& e) {
      cell.result = ordered_json{{"error", e.what()}};
    }
  });
  for (const Cell& cell : cells) {
    if (cell.result.contains("error")) {
      std::string section =
          (cell.dataset == kReal ? std::string("real")
                                 : synths[cell.dataset].first) +
          ":" + to_string(cell.paradigm) + ":" + to_string(cell.family);
      failures.push_back(ordered_json{{"section", section},
                                      {"error", cell.result["error"]}});
    }
  }

  ordered_json synth_sections = ordered_json::array();
  for (std::size_t i = 0; i < synths.size(); ++i) {
    const std::string& name = synths[i].first;
    ordered_json section = synth_meta[i];
    const DataTable& synth_raw = synth_clean[i];

    section["significance"] = guard(name + ":significance", [&] {
      return significance_json(real_clean, synth_raw);
    });

    DataTable synth_imp = synth_raw;
    bool synth_imputed = false;
    try {
      synth_imp = impute_whole(synth_raw, config, &section);
      synth_imputed = true;
    } catch (const std::exception& e) {
      failures.push_back(
          ordered_json{{"section", name + ":impute"}, {"error", e.what()}});
      section["imputation"] = ordered_json{{"error", e.what()}};
    }
    bool complete = real_imputed && synth_imputed;

    section["fidelity"] = guard(name + ":fidelity", [&]() -> ordered_json {
      if (!complete) throw Error("imputation failed upstream");
      return fidelity_json(real_imp, synth_imp, real_clean, synth_raw);
    });
    section["km"] = guard(name + ":km", [&]() -> ordered_json {
      if (!complete) throw Error("imputation failed upstream");
      fidelity::KmMetrics km =
          fidelity::km_metrics(km_of_table(real_imp), km_of_table(synth_imp));
      return ordered_json{{"optimism", km.optimism},
                          {"km_divergence", km.km_divergence},
                          {"short_sightedness", km.short_sightedness},
                          {"horizon", km.horizon}};
    });
    section["feature_preservation"] =
        guard(name + ":feature_preservation", [&]() -> ordered_json {
          if (!complete) throw Error("imputation failed upstream");
          return preservation_json(real_imp, synth_imp);
        });

    ordered_json utility;
    for (Paradigm paradigm :
         {Paradigm::kTSTR, Paradigm::kTRTS, Paradigm::kTSTS}) {
      ordered_json entry;
      for (const Cell& cell : cells) {
        if (cell.dataset == i && cell.paradigm == paradigm)
          entry[to_string(cell.family)] = cell.result;
      }
      utility[to_string(paradigm)] = std::move(entry);
    }
    section["utility"] = std::move(utility);

    section["privacy"] = guard(name + ":privacy", [&]() -> ordered_json {
      if (!complete) throw Error("imputation failed upstream");
      DataTable train_imp = take_rows(real_imp, plan.train_valid());
      DataTable test_imp = take_rows(real_imp, plan.test);
      return privacy_json(real_clean, synth_raw, train_imp, test_imp,
                          synth_imp, config, name);
    });

    synth_sections.push_back(std::move(section));
  }
  data["synthetic"] = std::move(synth_sections);

  ordered_json trtr;
  for (const Cell& cell : cells) {
    if (cell.dataset == kReal) trtr[to_string(cell.family)] = cell.result;
  }
  data["real_baseline"] = ordered_json{{"TRTR", std::move(trtr)}};

  data["failures"] = failures;
  report.has_failures = !failures.empty();
  return report;
}

}  // namespace survaudit::harness
