#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "olu/driver.hpp"
#include "olu/learner.hpp"
#include "olu/objective.hpp"
#include "olu/rng.hpp"

namespace olu {

// Regularized hinge loss l(x) = max(0, 1-x) + lambda |x|, lambda in (0,1).
// Minimized at x = 1 with value lambda.
inline double hinge_value(double x, double lambda) {
  return std::max(0.0, 1.0 - x) + lambda * std::abs(x);
}

// Subgradient of the regularized hinge. Tie-breaks: lambda - 1 at x = 0
// (the descent-productive choice from the w_0 = 0 start) and lambda at
// x = 1 (the right branch).
inline double hinge_subgrad(double x, double lambda) {
  if (x < 0.0) return -1.0 - lambda;
  if (x < 1.0) return lambda - 1.0;
  return lambda;
}

/// Sparse classification instance: examples z_i = c_i e_i with labels +1, so
/// F(w) = (1/d) sum_i l(c_i w[i]).
struct Dataset {
  std::vector<double> scales;  // c_1..c_d
  double lambda = 0.25;

  int dim() const { return int(scales.size()); }

  void validate() const {
    if (scales.empty()) throw std::invalid_argument("dataset is empty");
    if (!(lambda > 0.0 && lambda < 1.0)) {
      throw std::invalid_argument("lambda must lie in (0,1)");
    }
  }
};

inline Dataset make_unit_dataset(int d, double lambda = 0.25) {
  Dataset ds;
  ds.scales.assign(std::size_t(d), 1.0);
  ds.lambda = lambda;
  return ds;
}

// c_i ~ Unif[0,2] from the dedicated "scales" stream.
inline Dataset make_scaled_dataset(int d, double lambda, std::uint64_t seed) {
  Dataset ds;
  ds.lambda = lambda;
  Rng rng(seed, "scales");
  ds.scales.resize(std::size_t(d));
  for (double& c : ds.scales) c = rng.uniform(0.0, 2.0);
  return ds;
}

inline double full_batch_loss(const Dataset& ds, std::span<const double> w) {
  double acc = 0.0;
  for (std::size_t i = 0; i < ds.scales.size(); ++i) {
    acc += hinge_value(ds.scales[i] * w[i], ds.lambda);
  }
  return acc / double(ds.scales.size());
}

// Samples i uniformly and returns c_i * l'(c_i w[i]) * e_i: one nonzero
// coordinate at most, unbiased for grad F up to subgradient selection.
inline std::vector<double> stochastic_grad_classification(
    std::span<const double> w, const Dataset& ds, Rng& rng) {
  std::vector<double> g(w.size(), 0.0);
  const long i = rng.uniform_int(long(ds.scales.size()));
  const double c = ds.scales[std::size_t(i)];
  g[std::size_t(i)] = c * hinge_subgrad(c * w[std::size_t(i)], ds.lambda);
  return g;
}

// min_w F(w). Each term with c_i > 0 bottoms out at lambda (at w[i] = 1/c_i);
// a zero scale pins its term at l(0) = 1.
inline double optimum_value(const Dataset& ds) {
  double acc = 0.0;
  for (double c : ds.scales) acc += c > 0.0 ? ds.lambda : 1.0;
  return acc / double(ds.scales.size());
}

inline bool has_degenerate_scale(const Dataset& ds) {
  return std::any_of(ds.scales.begin(), ds.scales.end(),
                     [](double c) { return c == 0.0; });
}

inline Objective make_classification_objective(const Dataset& ds) {
  ds.validate();
  Objective f;
  f.dim = ds.dim();
  f.value = [ds](std::span<const double> w) { return full_batch_loss(ds, w); };
  f.stochastic_grad = [ds](std::span<const double> w, Rng& rng) {
    return stochastic_grad_classification(w, ds, rng);
  };
  f.exact_grad = [ds](std::span<const double> w) {
    std::vector<double> g(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double c = ds.scales[i];
      g[i] = c * hinge_subgrad(c * w[i], ds.lambda) / double(w.size());
    }
    return g;
  };
  return f;
}

struct ExperimentConfig {
  enum class Setting { unit, scaled };
  Setting setting = Setting::unit;
  int d = 100;
  double lambda = 0.25;
  double eta = 0.01;          // SGD step size
  double adam_alpha = 0.01;   // scaled alpha for the Adam family
  std::optional<double> adam_gamma;  // original parameterization, if preferred
  std::vector<double> betas = {0.99, 1.0};  // one beta < 1 and the beta = 1 baseline
  long T = 20000;
  int seeds = 5;
  long eval_every = 200;
  std::uint64_t base_seed = 1;

  void validate() const {
    if (d <= 0 || T <= 0 || seeds <= 0 || eval_every <= 0) {
      throw std::invalid_argument("d, T, seeds, eval_every must be positive");
    }
    if (!(lambda > 0.0 && lambda < 1.0)) {
      throw std::invalid_argument("lambda must lie in (0,1)");
    }
    if (!(eta >= 0.0)) throw std::invalid_argument("eta must be >= 0");
    for (double b : betas) {
      if (!(b > 0.0 && b <= 1.0)) {
        throw std::invalid_argument("beta must lie in (0,1]");
      }
    }
  }
};

struct LossTrace {
  std::string learner;
  int seed = 0;
  std::vector<std::pair<long, double>> points;  // (step, full-batch F)
};

struct LearnerSummary {
  std::string learner;
  double final_mean = 0.0;
  double final_min = 0.0;
  double final_max = 0.0;
  std::vector<long> tau_first_crossing;  // per coordinate; -1 = never crossed
};

struct ExperimentResult {
  Dataset dataset;
  double f_star = 0.0;
  std::vector<LossTrace> traces;
  std::vector<LearnerSummary> summaries;
  std::vector<std::string> learner_names;  // plotting order
};

namespace detail {

inline std::string experiment_learner_name(const ExperimentConfig& cfg,
                                           std::size_t which_beta) {
  const double b = cfg.betas[which_beta];
  if (b == 1.0) return "adam_beta1.0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "adam_beta%g", b);
  return buf;
}

}  // namespace detail

/// Runs the hinge-loss experiment: SGD(eta) plus one OLU-Adam per requested
/// beta, each over `seeds` runs with common random numbers (the data-sampling
/// stream depends only on the seed, so every learner sees the same i(t)
/// sequence). F is convex, so the driver runs with s_t = 1.
inline ExperimentResult run_classification_experiment(
    const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.dataset =
      cfg.setting == ExperimentConfig::Setting::unit
          ? make_unit_dataset(cfg.d, cfg.lambda)
          : make_scaled_dataset(cfg.d, cfg.lambda, cfg.base_seed);
  result.f_star = optimum_value(result.dataset);
  const Objective objective = make_classification_objective(result.dataset);

  std::vector<std::pair<std::string, LearnerConfig>> learners;
  learners.emplace_back("sgd", make_sgd(cfg.eta));
  for (std::size_t bi = 0; bi < cfg.betas.size(); ++bi) {
    LearnerConfig lc = make_discounted(cfg.adam_alpha, cfg.betas[bi], cfg.betas[bi]);
    if (cfg.adam_gamma) {
      if (cfg.betas[bi] == 1.0) {
        // gamma -> alpha needs beta2 < 1; keep the undiscounted baseline on
        // the same alpha as its beta < 1 sibling for a like-for-like scale.
        double ref_beta = 1.0;
        for (double b : cfg.betas) {
          if (b < 1.0) ref_beta = std::min(ref_beta, b);
        }
        if (ref_beta < 1.0) {
          LearnerConfig tmp = make_discounted(1.0, ref_beta, ref_beta);
          tmp.gamma = cfg.adam_gamma;
          lc.alpha = tmp.alpha_from_gamma();
        }
      } else {
        lc.gamma = cfg.adam_gamma;
      }
    }
    learners.emplace_back(detail::experiment_learner_name(cfg, bi), lc);
  }

  for (const auto& [name, learner_config] : learners) {
    result.learner_names.push_back(name);
    LearnerSummary summary;
    summary.learner = name;
    summary.tau_first_crossing.assign(std::size_t(cfg.d), -1);
    double final_sum = 0.0, final_min = 0.0, final_max = 0.0;
    for (int seed = 0; seed < cfg.seeds; ++seed) {
      Rng rng(cfg.base_seed + std::uint64_t(seed), "data");
      OluOptions options;
      options.s_mode = SMode::fixed_one;
      options.eval_every = cfg.eval_every;
      auto& tau = summary.tau_first_crossing;
      const auto& scales = result.dataset.scales;
      options.observer = [&tau, &scales, seed](long t,
                                               std::span<const double> w) {
        if (seed != 0) return;  // tau diagnostic tracks the first seed
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (tau[i] < 0 && scales[i] * w[i] > 1.0) tau[i] = t;
        }
      };
      Trajectory traj = run_olu(objective, learner_config, cfg.T, rng, options);
      LossTrace trace;
      trace.learner = name;
      trace.seed = seed;
      trace.points = std::move(traj.f_evals);
      const double final_f = trace.points.back().second;
      if (seed == 0) {
        final_min = final_max = final_f;
      } else {
        final_min = std::min(final_min, final_f);
        final_max = std::max(final_max, final_f);
      }
      final_sum += final_f;
      result.traces.push_back(std::move(trace));
    }
    summary.final_mean = final_sum / cfg.seeds;
    summary.final_min = final_min;
    summary.final_max = final_max;
    result.summaries.push_back(std::move(summary));
  }
  return result;
}

inline const LearnerSummary& find_summary(const ExperimentResult& result,
                                          const std::string& name) {
  for (const auto& s : result.summaries) {
    if (s.learner == name) return s;
  }
  throw std::out_of_range("no summary for learner " + name);
}

}  // namespace olu
