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

#include "survaudit/survival/cox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "survaudit/util/stats.hpp"

namespace survaudit::surv {

namespace {

constexpr double kCoefTol = 1e-7;
constexpr std::size_t kMaxCycles = 1000;

// Subjects ordered by ascending time, with failure groups over distinct
// event times. Shared by the likelihood, the baseline hazard and the
// univariate fit.
struct SurvOrder {
  std::vector<std::size_t> order;          // ascending time
  std::vector<double> group_time;          // distinct death times
  std::vector<std::size_t> group_start;    // first order-index with t >= tau_j
  std::vector<std::vector<std::size_t>> group_deaths;  // subject ids

  SurvOrder(const std::vector<double>& times, const std::vector<int>& events) {
    std::size_t n = times.size();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return times[a] < times[b];
    });
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      std::vector<std::size_t> deaths;
      while (j < n && times[order[j]] == times[order[i]]) {
        if (events[order[j]] != 0) deaths.push_back(order[j]);
        ++j;
      }
      if (!deaths.empty()) {
        group_time.push_back(times[order[i]]);
        group_start.push_back(i);
        group_deaths.push_back(std::move(deaths));
      }
      i = j;
    }
  }
};

}  // namespace

PartialLikelihood efron_loglik(const std::vector<double>& times,
                               const std::vector<int>& events,
                               const Eigen::VectorXd& eta,
                               bool need_derivatives) {
  std::size_t n = times.size();
  if (events.size() != n || static_cast<std::size_t>(eta.size()) != n)
    throw Error("efron_loglik: input length mismatch");
  SurvOrder orderd(times, events);
  if (orderd.group_deaths.empty()) throw Error("efron_loglik: no events");

  // The partial likelihood is invariant to shifting eta; shift by the max
  // so exp never overflows.
  double shift = eta.maxCoeff();
  Eigen::VectorXd theta(n);
  for (std::size_t i = 0; i < n; ++i) theta[i] = std::exp(eta[i] - shift);

  // Suffix sums of theta over the time ordering give the risk-set sums.
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;)
    suffix[k] = suffix[k + 1] + theta[orderd.order[k]];

  std::size_t m = orderd.group_deaths.size();
  PartialLikelihood out;
  std::vector<double> alpha(m), betasq(m), alpha_death(m), betasq_death(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& deaths = orderd.group_deaths[j];
    double d = static_cast<double>(deaths.size());
    double risk_sum = suffix[orderd.group_start[j]];
    double death_sum = 0.0;
    for (std::size_t i : deaths) death_sum += theta[i];

    double a = 0.0, b = 0.0, ad = 0.0, bd = 0.0;
    for (std::size_t l = 0; l < deaths.size(); ++l) {
      double frac = static_cast<double>(l) / d;
      double phi = risk_sum - frac * death_sum;
      out.loglik -= std::log(phi);
      if (need_derivatives) {
        double inv = 1.0 / phi;
        double w = 1.0 - frac;
        a += inv;
        b += inv * inv;
        ad += w * inv;
        bd += w * w * inv * inv;
      }
    }
    for (std::size_t i : deaths) out.loglik += eta[i] - shift;
    alpha[j] = a;
    betasq[j] = b;
    alpha_death[j] = ad;
    betasq_death[j] = bd;
  }

  if (!need_derivatives) return out;

  // Per-subject accumulations: every failure group with tau_j <= t_i
  // contributes alpha_j (beta_j); a subject's own failure group contributes
  // the death-weighted sums instead.
  std::vector<double> cum_alpha(m), cum_beta(m);
  double ca = 0.0, cb = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    ca += alpha[j];
    cb += betasq[j];
    cum_alpha[j] = ca;
    cum_beta[j] = cb;
  }

  out.d_eta = Eigen::VectorXd::Zero(n);
  out.neg_d2_eta = Eigen::VectorXd::Zero(n);
  std::size_t j = 0;
  std::vector<double> a_of(n, 0.0), b_of(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = orderd.order[k];
    while (j < m && orderd.group_start[j] <= k &&
           orderd.group_time[j] <= times[i])
      ++j;
    if (j > 0) {
      a_of[i] = cum_alpha[j - 1];
      b_of[i] = cum_beta[j - 1];
    }
  }
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t i : orderd.group_deaths[g]) {
      a_of[i] += alpha_death[g] - alpha[g];
      b_of[i] += betasq_death[g] - betasq[g];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.d_eta[i] = (events[i] != 0 ? 1.0 : 0.0) - theta[i] * a_of[i];
    double w = theta[i] * a_of[i] - theta[i] * theta[i] * b_of[i];
    out.neg_d2_eta[i] = std::max(w, 0.0);
  }
  return out;
}

Eigen::VectorXd cox_gradient(const SurvivalData& data,
                             const Eigen::VectorXd& beta) {
  Eigen::VectorXd eta = data.features * beta;
  PartialLikelihood pl = efron_loglik(data.times, data.events, eta, true);
  return data.features.transpose() * pl.d_eta;
}

namespace {

double elastic_net(const Eigen::VectorXd& beta, double penalty,
                   double l1_ratio) {
  return penalty * (l1_ratio * beta.lpNorm<1>() +
                    0.5 * (1.0 - l1_ratio) * beta.squaredNorm());
}

double soft_threshold(double x, double t) {
  if (x > t) return x - t;
  if (x < -t) return x + t;
  return 0.0;
}

}  // namespace

double CoxModel::baseline_at(double t) const {
  auto it = std::upper_bound(baseline_times.begin(), baseline_times.end(), t);
  if (it == baseline_times.begin()) return 0.0;
  return baseline_cumhaz[static_cast<std::size_t>(it - baseline_times.begin()) -
                         1];
}

CoxModel fit_cox(const SurvivalData& data, double penalty, double l1_ratio,
                 std::uint64_t /*seed*/) {
  std::size_t n = data.n();
  std::size_t p = data.n_features();
  if (n == 0) throw Error("fit_cox: empty data");
  if (data.n_events() == 0) throw Error("fit_cox: no events");
  if (penalty < 0.0 || l1_ratio < 0.0 || l1_ratio > 1.0)
    throw Error("fit_cox: invalid penalty settings");

  CoxModel model;
  model.penalty = penalty;
  model.l1_ratio = l1_ratio;
  model.feature_names = data.feature_names;
  model.beta = Eigen::VectorXd::Zero(p);

  const double inv_n = 1.0 / static_cast<double>(n);
  auto objective = [&](const Eigen::VectorXd& beta, double& loglik) {
    Eigen::VectorXd eta = data.features * beta;
    PartialLikelihood pl = efron_loglik(data.times, data.events, eta, false);
    loglik = pl.loglik;
    if (!std::isfinite(pl.loglik))
      return std::numeric_limits<double>::infinity();
    return -inv_n * pl.loglik + elastic_net(beta, penalty, l1_ratio);
  };

  double ll = 0.0;
  double obj = objective(model.beta, ll);
  if (!std::isfinite(obj)) throw Error("fit_cox: non-finite likelihood");

  for (std::size_t cycle = 1; cycle <= kMaxCycles && p > 0; ++cycle) {
    Eigen::VectorXd beta_old = model.beta;

    // IRLS quadratic approximation at the current beta.
    Eigen::VectorXd eta = data.features * model.beta;
    PartialLikelihood pl = efron_loglik(data.times, data.events, eta, true);
    Eigen::VectorXd w = pl.neg_d2_eta.cwiseMax(1e-12);
    Eigen::VectorXd z = eta + (pl.d_eta.array() / w.array()).matrix();

    // One full coordinate sweep with soft-thresholding.
    Eigen::VectorXd residual = z - eta;
    for (std::size_t k = 0; k < p; ++k) {
      const auto col = data.features.col(k);
      double beta_k = model.beta[k];
      double wx2 = (w.array() * col.array().square()).sum() * inv_n;
      double num =
          (w.array() * col.array() * residual.array()).sum() * inv_n +
          wx2 * beta_k;
      double denom = wx2 + penalty * (1.0 - l1_ratio);
      double beta_new =
          denom > 0.0 ? soft_threshold(num, penalty * l1_ratio) / denom : 0.0;
      if (beta_new != beta_k) {
        residual -= col * (beta_new - beta_k);
        model.beta[k] = beta_new;
      }
    }

    // Backtrack toward the previous iterate if the sweep overshot; the
    // penalized objective must never increase.
    double new_obj = objective(model.beta, ll);
    int halvings = 0;
    while (new_obj > obj + 1e-12 && halvings < 40) {
      model.beta = 0.5 * (model.beta + beta_old);
      new_obj = objective(model.beta, ll);
      ++halvings;
    }
    if (new_obj > obj + 1e-12) {
      if (!std::isfinite(new_obj))
        throw Error("fit_cox: non-finite likelihood persists after step "
                    "reduction");
      model.beta = beta_old;
      model.cycles = cycle;
      model.objective_path.push_back(obj);
      model.converged = true;
      break;
    }
    obj = new_obj;
    model.cycles = cycle;
    model.objective_path.push_back(obj);

    double max_change = (model.beta - beta_old).cwiseAbs().maxCoeff();
    if (max_change < kCoefTol) {
      model.converged = true;
      break;
    }
  }
  if (p == 0) model.converged = true;

  // Breslow baseline cumulative hazard at the fitted beta.
  SurvOrder orderd(data.times, data.events);
  Eigen::VectorXd eta = data.features * model.beta;
  double shift = eta.maxCoeff();
  Eigen::VectorXd theta(n);
  for (std::size_t i = 0; i < n; ++i) theta[i] = std::exp(eta[i] - shift);
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;)
    suffix[k] = suffix[k + 1] + theta[orderd.order[k]];
  double cum = 0.0;
  for (std::size_t j = 0; j < orderd.group_deaths.size(); ++j) {
    double d = static_cast<double>(orderd.group_deaths[j].size());
    cum += d / (suffix[orderd.group_start[j]] * std::exp(shift));
    model.baseline_times.push_back(orderd.group_time[j]);
    model.baseline_cumhaz.push_back(cum);
  }
  return model;
}

Eigen::VectorXd cox_risk(const CoxModel& model, const Eigen::MatrixXd& X) {
  if (X.cols() != model.beta.size())
    throw Error("cox_risk: feature count mismatch");
  return X * model.beta;
}

Eigen::MatrixXd cox_survival(const CoxModel& model, const Eigen::MatrixXd& X,
                             const std::vector<double>& grid) {
  if (X.cols() != model.beta.size())
    throw Error("cox_survival: feature count mismatch");
  Eigen::VectorXd eta = X * model.beta;
  Eigen::MatrixXd out(X.rows(), grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double h0 = model.baseline_at(grid[g]);
    for (Eigen::Index i = 0; i < X.rows(); ++i)
      out(i, g) = std::exp(-h0 * std::exp(eta[i]));
  }
  return out;
}

namespace {

// Exact scalar log-likelihood, gradient and observed information for a
// single covariate (Efron ties).
void efron_univariate(const std::vector<double>& times,
                      const std::vector<int>& events,
                      const Eigen::VectorXd& x, double beta, double& loglik,
                      double& grad, double& info) {
  std::size_t n = times.size();
  SurvOrder orderd(times, events);
  Eigen::VectorXd eta = beta * x;
  double shift = eta.maxCoeff();
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) theta[i] = std::exp(eta[i] - shift);

  std::vector<double> s0(n + 1, 0.0), s1(n + 1, 0.0), s2(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    std::size_t i = orderd.order[k];
    s0[k] = s0[k + 1] + theta[i];
    s1[k] = s1[k + 1] + theta[i] * x[i];
    s2[k] = s2[k + 1] + theta[i] * x[i] * x[i];
  }

  loglik = 0.0;
  grad = 0.0;
  info = 0.0;
  for (std::size_t j = 0; j < orderd.group_deaths.size(); ++j) {
    const auto& deaths = orderd.group_deaths[j];
    double d = static_cast<double>(deaths.size());
    std::size_t start = orderd.group_start[j];
    double d0 = 0.0, d1 = 0.0, d2 = 0.0;
    for (std::size_t i : deaths) {
      loglik += eta[i] - shift;
      grad += x[i];
      d0 += theta[i];
      d1 += theta[i] * x[i];
      d2 += theta[i] * x[i] * x[i];
    }
    for (std::size_t l = 0; l < deaths.size(); ++l) {
      double frac = static_cast<double>(l) / d;
      double phi0 = s0[start] - frac * d0;
      double phi1 = s1[start] - frac * d1;
      double phi2 = s2[start] - frac * d2;
      loglik -= std::log(phi0);
      grad -= phi1 / phi0;
      info += phi2 / phi0 - (phi1 / phi0) * (phi1 / phi0);
    }
  }
}

}  // namespace

UnivariateCox cox_univariate(const SurvivalData& data, std::size_t feature) {
  if (feature >= data.n_features())
    throw Error("cox_univariate: feature index out of range");
  UnivariateCox result;
  Eigen::VectorXd x = data.features.col(feature);
  double spread = x.maxCoeff() - x.minCoeff();
  if (spread == 0.0 || data.n_events() == 0) return result;  // non-estimable

  double beta = 0.0, ll = 0.0, grad = 0.0, info = 0.0;
  efron_univariate(data.times, data.events, x, beta, ll, grad, info);
  for (int iter = 0; iter < 60; ++iter) {
    if (!(info > 0.0)) return result;
    double step = grad / info;
    double candidate = beta + step;
    double new_ll, new_grad, new_info;
    efron_univariate(data.times, data.events, x, candidate, new_ll, new_grad,
                     new_info);
    int halvings = 0;
    while ((!std::isfinite(new_ll) || new_ll < ll - 1e-12) && halvings < 30) {
      candidate = 0.5 * (candidate + beta);
      efron_univariate(data.times, data.events, x, candidate, new_ll,
                       new_grad, new_info);
      ++halvings;
    }
    if (!std::isfinite(new_ll)) return result;
    double change = std::fabs(candidate - beta);
    beta = candidate;
    ll = new_ll;
    grad = new_grad;
    info = new_info;
    if (change < 1e-10) break;
    if (std::fabs(beta) * spread > 500.0) return result;  // monotone likelihood
  }
  if (!(info > 0.0)) return result;

  result.beta = beta;
  result.se = 1.0 / std::sqrt(info);
  double z = beta / result.se;
  result.p_value = 2.0 * (1.0 - normal_cdf(std::fabs(z)));
  result.sign = beta > 0.0 ? 1 : (beta < 0.0 ? -1 : 0);
  result.estimable = true;
  return result;
}

}  // namespace survaudit::surv
