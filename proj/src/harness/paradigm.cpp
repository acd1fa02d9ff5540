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

#include "survaudit/harness/paradigm.hpp"

#include "survaudit/harness/split.hpp"
#include "survaudit/survival/brier.hpp"
#include "survaudit/survival/concordance.hpp"
#include "survaudit/survival/cox.hpp"
#include "survaudit/survival/kaplan_meier.hpp"
#include "survaudit/util/rng.hpp"

namespace survaudit::harness {

std::string to_string(Paradigm paradigm) {
  switch (paradigm) {
    case Paradigm::kTRTR: return "TRTR";
    case Paradigm::kTSTR: return "TSTR";
    case Paradigm::kTRTS: return "TRTS";
    case Paradigm::kTSTS: return "TSTS";
  }
  return "?";
}

bool trains_on_synthetic(Paradigm paradigm) {
  return paradigm == Paradigm::kTSTR || paradigm == Paradigm::kTSTS;
}

bool tests_on_synthetic(Paradigm paradigm) {
  return paradigm == Paradigm::kTRTS || paradigm == Paradigm::kTSTS;
}

namespace {

surv::SurvivalData slice_rows(const surv::SurvivalData& data,
                              std::size_t begin, std::size_t end) {
  surv::SurvivalData out;
  out.times.assign(data.times.begin() + begin, data.times.begin() + end);
  out.events.assign(data.events.begin() + begin, data.events.begin() + end);
  out.features = data.features.middleRows(begin, end - begin);
  out.feature_names = data.feature_names;
  return out;
}

}  // namespace

ParadigmResult run_paradigm(const DataTable& real, const DataTable& synth,
                            Paradigm paradigm, ModelFamily family,
                            impute::ImputeMethod impute_method,
                            std::uint64_t seed) {
  try {
    const DataTable& train_source =
        trains_on_synthetic(paradigm) ? synth : real;
    const DataTable& test_source = tests_on_synthetic(paradigm) ? synth : real;
    SplitPlan train_plan = stratified_split(train_source, seed);
    SplitPlan test_plan = stratified_split(test_source, seed);

    // Train rows first, then valid rows; the grid search slices them back.
    DataTable trainval = take_rows(train_source, train_plan.train_valid());
    DataTable test = take_rows(test_source, test_plan.test);

    impute::ImputeConfig impute_cfg;
    impute_cfg.method = impute_method;
    impute_cfg.seed = seed;
    impute::ImputerModel imputer = impute::fit_imputer(trainval, impute_cfg);
    DataTable trainval_imp = impute::apply_imputer(imputer, trainval);
    DataTable test_imp = impute::apply_imputer(imputer, test);

    surv::SurvivalData sd_trainval = surv::to_survival_data(trainval_imp);
    surv::SurvivalData sd_test = surv::to_survival_data(test_imp);
    surv::SurvivalData sd_train =
        slice_rows(sd_trainval, 0, train_plan.train.size());
    surv::SurvivalData sd_valid = slice_rows(
        sd_trainval, train_plan.train.size(), sd_trainval.n());

    Rng rng(seed);
    GridChoice choice = grid_search(sd_train, sd_valid, family,
                                    rng.stream("grid").root_seed());

    // Final refit on the full 80% with its own z-score statistics.
    surv::FeatureScaler scaler = surv::fit_feature_scaler(sd_trainval.features);
    surv::SurvivalData fit_data = sd_trainval;
    fit_data.features =
        surv::apply_feature_scaler(scaler, sd_trainval.features);
    Eigen::MatrixXd test_x = surv::apply_feature_scaler(scaler, sd_test.features);

    ParadigmResult result;
    result.chosen = choice.description;
    result.validation_c = choice.validation_c_index;

    std::vector<double> grid = surv::ibs_grid(sd_test.times, sd_test.events);
    surv::KMCurve censor =
        surv::censoring_km(sd_trainval.times, sd_trainval.events);

    Eigen::VectorXd risks;
    Eigen::MatrixXd surv_matrix;
    if (family == ModelFamily::kCox) {
      CoxCandidate cand = cox_grid()[choice.index];
      surv::CoxModel model =
          surv::fit_cox(fit_data, cand.penalty, cand.l1_ratio);
      risks = surv::cox_risk(model, test_x);
      surv_matrix = surv::cox_survival(model, test_x, grid);
    } else {
      surv::ForestHyperparams params = rsf_grid()[choice.index];
      surv::ForestModel model = surv::fit_rsf(
          fit_data, params, rng.stream("final_rsf").root_seed());
      risks = surv::rsf_risk(model, test_x);
      surv_matrix = surv::rsf_survival(model, test_x, grid);
    }

    std::vector<double> r(risks.data(), risks.data() + risks.size());
    result.c_index = surv::c_index(sd_test.times, sd_test.events, r);
    surv::IbsResult ibs = surv::integrated_brier(surv_matrix, grid,
                                                 sd_test.times, sd_test.events,
                                                 censor);
    result.ibs = ibs.value;
    result.ibs_weights_capped = ibs.weights_capped;
    return result;
  } catch (const Error& e) {
    throw Error(to_string(paradigm) + "/" + to_string(family) + ": " +
                e.what());
  }
}

}  // namespace survaudit::harness
