#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "olu/learner.hpp"
#include "olu/numeric.hpp"
#include "olu/objective.hpp"
#include "olu/rng.hpp"

namespace olu {

enum class SMode { uniform, fixed_one };

/// Record of one optimizer run. updates[t-1] is the increment applied at
/// step t (the learner's play computed from g_{1:t-1}), so
/// iterates[t] - iterates[t-1] = updates[t-1] holds exactly. Beyond
/// kFullRecordLimit steps only running sums are kept.
struct Trajectory {
  int d = 0;
  long T = 0;
  bool full_record = true;
  std::vector<std::vector<double>> iterates;   // w_0..w_T (full record only)
  std::vector<std::vector<double>> updates;    // applied increments (full record only)
  std::vector<std::vector<double>> gradients;  // g_1..g_T (full record only)
  std::vector<double> s;                       // s_1..s_T (full record only)
  std::vector<std::pair<long, double>> f_evals;
  std::vector<double> final_iterate;
  double total_loss = 0.0;  // sum_t <g_t, increment at t>
};

inline constexpr long kFullRecordLimit = 1 << 16;

struct OluOptions {
  SMode s_mode = SMode::fixed_one;
  long eval_every = 0;  // 0 = never evaluate F along the way
  std::function<void(long, std::span<const double>)> observer;
  std::vector<double> start;  // w_0; zeros when empty
  // Dedicated stream for the s_t draws; with it set, the data-sampling
  // stream is untouched by the query randomization (common random numbers
  // across s modes). Falls back to the main rng when absent.
  std::optional<std::uint64_t> s_seed;
};

/// Runs the online-learning-of-updates loop for T rounds.
///
/// Per round t: the learner's current play (a function of g_{1:t-1}) is taken
/// as the increment, s_t is drawn (or fixed to 1), the gradient is queried at
/// w_{t-1} + s_t * increment, the increment is applied, and the gradient is
/// fed back to the learner. This ordering makes sum_t <g_t, Delta_{t-1} - u_{t-1}>
/// the literal dynamic regret of the learner on the loss stream v_t = g_t.
inline Trajectory run_olu(const Objective& objective,
                          const LearnerConfig& learner_config, long T,
                          Rng& rng, const OluOptions& options = {}) {
  const int d = objective.dim;
  VectorLearner learner(learner_config, d);
  Trajectory traj;
  traj.d = d;
  traj.T = T;
  traj.full_record = T <= kFullRecordLimit;

  std::vector<double> w(std::size_t(d), 0.0);
  if (!options.start.empty()) {
    if (int(options.start.size()) != d) {
      throw std::invalid_argument("start point dimension != objective dimension");
    }
    w = options.start;
  }
  if (traj.full_record) traj.iterates.push_back(w);
  std::vector<double> query(std::size_t(d), 0.0);
  std::optional<Rng> s_rng;
  if (options.s_seed) s_rng.emplace(*options.s_seed, "s");

  for (long t = 1; t <= T; ++t) {
    const std::vector<double> increment = learner.play();
    const double st = options.s_mode == SMode::uniform
                          ? (s_rng ? s_rng->uniform() : rng.uniform())
                          : 1.0;
    for (int i = 0; i < d; ++i) query[i] = w[i] + st * increment[i];
    std::vector<double> g = objective.stochastic_grad(query, rng);
    if (int(g.size()) != d) {
      throw std::invalid_argument("gradient dimension != objective dimension");
    }
    for (double x : g) {
      if (!std::isfinite(x)) {
        throw std::runtime_error("non-finite gradient at step " +
                                 std::to_string(t));
      }
    }
    for (int i = 0; i < d; ++i) {
      traj.total_loss += g[i] * increment[i];
      w[i] += increment[i];
    }
    learner.observe(g);

    if (traj.full_record) {
      traj.iterates.push_back(w);
      traj.updates.push_back(increment);
      traj.gradients.push_back(std::move(g));
      traj.s.push_back(st);
    }
    if (options.eval_every > 0 &&
        (t % options.eval_every == 0 || t == T)) {
      traj.f_evals.emplace_back(t, objective.value(w));
    }
    if (options.observer) options.observer(t, w);
  }
  traj.final_iterate = std::move(w);
  return traj;
}

// sum_t <g_t, increment applied at t> (= sum_t <g_t, Delta_{t-1}> in learner
// indexing); by definition this equals sum_t <g_t, u_{t-1}> plus the dynamic
// regret against u.
inline double total_loss(const Trajectory& traj) { return traj.total_loss; }

/// Direct evaluation of the Adam update from the raw gradient history:
///   Delta_t[i] = -alpha_t * sum_s beta1^(t-s) g_s[i]
///                / sqrt(sum_s (beta2^(t-s) g_s[i])^2),
/// 0/0 -> 0 per coordinate. O(t) per call; the recurrence path is the fast
/// one, this is its cross-check.
inline std::vector<double> adam_reference_update(
    std::span<const std::vector<double>> g_history, double alpha_t,
    double beta1, double beta2) {
  if (g_history.empty()) {
    throw std::invalid_argument("adam_reference_update: empty history");
  }
  const std::size_t d = g_history.front().size();
  const std::size_t t = g_history.size();
  std::vector<double> out(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    double num = 0.0, den = 0.0;
    for (std::size_t s = 0; s < t; ++s) {
      const double w1 = std::pow(beta1, double(t - 1 - s));
      const double w2 = std::pow(beta2, double(t - 1 - s));
      num += w1 * g_history[s][i];
      den += (w2 * g_history[s][i]) * (w2 * g_history[s][i]);
    }
    out[i] = -alpha_t * safe_ratio(num, std::sqrt(den));
  }
  return out;
}

struct EquivalenceReport {
  bool ok = true;
  double max_rel_deviation = 0.0;
  long first_failure_t = -1;
  int first_failure_coord = -1;
};

/// Checks, for every prefix of the gradient stream and every coordinate, that
/// the recurrence-based learner play matches the direct Adam formula within
/// tol * (1 + |reference|).
inline EquivalenceReport verify_adam_equivalence(
    std::span<const std::vector<double>> g_stream, double alpha, double beta1,
    double beta2, double tol = 1e-12) {
  const int d = g_stream.empty() ? 0 : int(g_stream.front().size());
  VectorLearner learner(make_discounted(alpha, beta1, beta2), d);
  EquivalenceReport report;
  for (std::size_t t = 0; t < g_stream.size(); ++t) {
    learner.observe(g_stream[t]);
    const auto play = learner.play();
    const auto reference = adam_reference_update(
        g_stream.subspan(0, t + 1), alpha, beta1, beta2);
    for (int i = 0; i < d; ++i) {
      const double err = std::abs(play[i] - reference[i]);
      const double rel = err / (1.0 + std::abs(reference[i]));
      report.max_rel_deviation = std::max(report.max_rel_deviation, rel);
      if (rel > tol && report.ok) {
        report.ok = false;
        report.first_failure_t = long(t) + 1;
        report.first_failure_coord = i;
      }
    }
  }
  return report;
}

struct TelescopingReport {
  bool ok = true;
  double lhs = 0.0;  // F(w_T) - F(w_0)
  double rhs = 0.0;  // sum_t <avg grad_t, increment_t>
  double rel_error = 0.0;
};

/// Runs the OLU loop with the gradient query replaced by the exact averaged
/// gradient over the applied segment, and checks the telescoping identity
/// F(w_T) - F(w_0) = sum_t <avg g_t, Delta_t> (the expectation over s_t is
/// integrated out exactly, so the identity is deterministic).
inline TelescopingReport verify_telescoping_identity(
    const Objective& objective, const LearnerConfig& learner_config, long T,
    double rel_tol = 1e-9) {
  if (!objective.averaged_grad) {
    throw std::invalid_argument("objective lacks averaged_grad");
  }
  const int d = objective.dim;
  VectorLearner learner(learner_config, d);
  std::vector<double> w(std::size_t(d), 0.0);
  const double f0 = objective.value(w);
  double rhs = 0.0;
  for (long t = 1; t <= T; ++t) {
    const std::vector<double> increment = learner.play();
    const std::vector<double> g = objective.averaged_grad(w, increment);
    for (int i = 0; i < d; ++i) {
      rhs += g[i] * increment[i];
      w[i] += increment[i];
    }
    learner.observe(g);
  }
  TelescopingReport report;
  report.lhs = objective.value(w) - f0;
  report.rhs = rhs;
  report.rel_error = std::abs(report.lhs - report.rhs) /
                     std::max(1.0, std::max(std::abs(report.lhs),
                                            std::abs(report.rhs)));
  report.ok = rel_close(report.lhs, report.rhs, rel_tol, 1e-12);
  return report;
}

}  // namespace olu
