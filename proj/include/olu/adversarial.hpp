#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "olu/learner.hpp"
#include "olu/regret.hpp"

namespace olu {

/// The 2-D adversarial instance behind the baseline lower bounds.
///
/// With T_hat the largest multiple of 4 <= T: for t <= T_hat/2 the loss is
/// (1,0) on even t and (0,1) on odd t; for T_hat/2 < t <= T_hat the signs
/// flip; beyond T_hat losses are zero and the comparator freezes. The
/// comparator sits at (-1,-1) through round T_hat/2 and at (1,1) after,
/// which is the per-round argmin over [-1,1]^2.
struct LowerBoundInstance {
  std::vector<std::vector<double>> losses;       // v_1..v_T
  std::vector<std::vector<double>> comparators;  // u_0..u_{T-1}
  long T = 0;
  long T_hat = 0;

  // Per-coordinate loss stream v_1[i]..v_T[i].
  std::vector<double> coordinate_losses(int i) const {
    std::vector<double> out;
    out.reserve(losses.size());
    for (const auto& v : losses) out.push_back(v[std::size_t(i)]);
    return out;
  }

  double comparator_inner_product() const {  // sum_t <v_t, u_{t-1}>
    double acc = 0.0;
    for (std::size_t t = 0; t < losses.size(); ++t) {
      acc += losses[t][0] * comparators[t][0] + losses[t][1] * comparators[t][1];
    }
    return acc;
  }

  double coordinate_path_length(int i) const {
    double p = 0.0;
    for (std::size_t t = 1; t < comparators.size(); ++t) {
      p += std::abs(comparators[t][std::size_t(i)] -
                    comparators[t - 1][std::size_t(i)]);
    }
    return p;
  }

  // u_{t-1} in argmin_{u in [-1,1]^2} <v_t, u> for every t <= T_hat.
  bool argmin_check() const {
    for (long t = 1; t <= T_hat; ++t) {
      const auto& v = losses[std::size_t(t - 1)];
      const auto& u = comparators[std::size_t(t - 1)];
      for (int i = 0; i < 2; ++i) {
        if (v[i] > 0.0 && u[i] != -1.0) return false;
        if (v[i] < 0.0 && u[i] != 1.0) return false;
      }
    }
    return true;
  }
};

inline LowerBoundInstance make_lower_bound(long T) {
  if (T < 4) throw std::invalid_argument("make_lower_bound requires T >= 4");
  LowerBoundInstance inst;
  inst.T = T;
  inst.T_hat = (T / 4) * 4;
  inst.losses.reserve(std::size_t(T));
  inst.comparators.reserve(std::size_t(T));
  for (long t = 1; t <= T; ++t) {
    std::vector<double> v(2, 0.0);
    if (t <= inst.T_hat) {
      const double sign = t <= inst.T_hat / 2 ? 1.0 : -1.0;
      v[t % 2 == 0 ? 0 : 1] = sign;
    }
    inst.losses.push_back(std::move(v));
    // u_t for t = 0..T-1; flips to (1,1) at t = T_hat/2 and never moves again.
    const long u_index = t - 1;
    const double u = u_index <= inst.T_hat / 2 - 1 ? -1.0 : 1.0;
    inst.comparators.push_back({u, u});
  }
  return inst;
}

// Structural fact behind the no-momentum lower bound: consecutive losses are
// coordinate-wise orthogonal, so every member of the no-momentum family has
// total loss exactly zero on this stream.
inline bool assert_no_momentum_orthogonality(const LowerBoundInstance& inst) {
  for (std::size_t t = 0; t + 1 < inst.losses.size(); ++t) {
    for (int i = 0; i < 2; ++i) {
      if (inst.losses[t][i] * inst.losses[t + 1][i] != 0.0) return false;
    }
  }
  return true;
}

struct BaselineRow {
  std::string learner;
  double total_loss = 0.0;
  double dynamic_regret = 0.0;
};

// Plays a 1-D learner per coordinate against the fixed loss stream and
// accumulates sum_t <v_t, Delta_{t-1}>; dynamic regret follows by
// subtracting sum_t <v_t, u_{t-1}>.
inline BaselineRow run_baseline(const LowerBoundInstance& inst,
                                const LearnerConfig& config,
                                const std::string& name) {
  BaselineRow row;
  row.learner = name;
  for (int i = 0; i < 2; ++i) {
    const auto losses = inst.coordinate_losses(i);
    const auto plays = run_learner(config, losses);
    for (std::size_t t = 0; t < losses.size(); ++t) {
      row.total_loss += losses[t] * plays[t];
    }
  }
  row.dynamic_regret = row.total_loss - inst.comparator_inner_product();
  return row;
}

inline std::vector<BaselineRow> measure_baselines(
    const LowerBoundInstance& inst,
    std::span<const std::pair<std::string, LearnerConfig>> configs) {
  std::vector<BaselineRow> rows;
  rows.reserve(configs.size());
  for (const auto& [name, config] : configs) {
    rows.push_back(run_baseline(inst, config, name));
  }
  return rows;
}

// beta = 1 - c T^(-2/3), kept inside (0,1).
inline double tuned_beta(long T, double c) {
  return std::clamp(1.0 - c * std::pow(double(T), -2.0 / 3.0), 1e-6,
                    1.0 - 1e-12);
}

inline const std::vector<double>& default_c_grid() {
  static const std::vector<double> grid{0.5, 1.0, 2.0, 4.0};
  return grid;
}

using BetaRule = std::function<double(long, double)>;

// Clipped beta-FTRL under a discount rule beta(T, c), best c from the grid
// (smallest dynamic regret). Defaults to the T^(-2/3) rule.
inline BaselineRow run_tuned_clipped(const LowerBoundInstance& inst,
                                     std::span<const double> c_grid,
                                     const BetaRule& beta_rule = tuned_beta) {
  BaselineRow best;
  bool first = true;
  for (double c : c_grid) {
    const auto row =
        run_baseline(inst, make_clipped(1.0, beta_rule(inst.T, c), 1.0),
                     "clipped_tuned(c=" + std::to_string(c) + ")");
    if (first || row.dynamic_regret < best.dynamic_regret) {
      best = row;
      first = false;
    }
  }
  return best;
}

// Least-squares slope of log(y) against log(x); requires positive data.
inline double fit_loglog_slope(std::span<const double> xs,
                               std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("slope fit needs >= 2 points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = double(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("slope fit needs positive data");
    }
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct SweepRow {
  std::string learner;
  long T = 0;
  double regret = 0.0;
  double total_loss = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::map<std::string, double> slopes;  // per-learner log-log slope
};

/// Regret-vs-horizon sweep over the lower-bound instances for the three
/// learners of interest (and OGD for context, no assertion attached): the
/// no-momentum family, clipped FTRL without discounting, and clipped
/// beta-FTRL with the tuned T^(-2/3) discount.
inline SweepResult scaling_sweep(std::span<const long> T_grid,
                                 std::span<const double> c_grid,
                                 bool include_ogd = false,
                                 const BetaRule& beta_rule = tuned_beta) {
  if (T_grid.size() < 2) {
    throw std::invalid_argument("scaling_sweep needs >= 2 horizons");
  }
  for (std::size_t i = 1; i < T_grid.size(); ++i) {
    if (T_grid[i] <= T_grid[i - 1]) {
      throw std::invalid_argument("T grid must be strictly increasing");
    }
  }
  SweepResult result;
  std::map<std::string, std::vector<double>> regrets;
  for (long T : T_grid) {
    const auto inst = make_lower_bound(T);
    std::vector<BaselineRow> rows;
    rows.push_back(run_baseline(inst, make_adagrad(1.0), "no_momentum"));
    rows.push_back(run_baseline(inst, make_clipped(1.0, 1.0, 1.0), "clipped_beta1"));
    rows.push_back(run_tuned_clipped(inst, c_grid, beta_rule));
    rows.back().learner = "clipped_tuned";
    if (include_ogd) {
      rows.push_back(run_baseline(inst, make_ogd(1.0 / std::sqrt(double(T)), 1.0),
                                  "ogd"));
    }
    for (const auto& row : rows) {
      result.rows.push_back({row.learner, T, row.dynamic_regret, row.total_loss});
      regrets[row.learner].push_back(row.dynamic_regret);
    }
  }
  std::vector<double> ts(T_grid.size());
  for (std::size_t i = 0; i < T_grid.size(); ++i) ts[i] = double(T_grid[i]);
  for (const auto& [name, ys] : regrets) {
    result.slopes[name] = fit_loglog_slope(ts, ys);
  }
  return result;
}

}  // namespace olu
