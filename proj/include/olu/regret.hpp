#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "olu/learner.hpp"
#include "olu/moments.hpp"
#include "olu/rng.hpp"

namespace olu {

/// Aligned (loss, play, comparator) history of one 1-D online game.
///
/// losses holds v_1..v_T, plays holds Delta_0..Delta_{T-1} (the play paired
/// with v_t is Delta_{t-1}), comparators holds u_0..u_{T-1}. play_after_last
/// is Delta_T when the ledger came from a learner run; the bound evaluators
/// need it because the regret bounds take max_t |Delta_t| over t in [1,T].
struct RegretLedger {
  std::vector<double> losses;
  std::vector<double> plays;
  std::vector<double> comparators;
  std::optional<double> play_after_last;

  long horizon() const { return long(losses.size()); }

  void validate() const {
    if (losses.empty() || plays.size() != losses.size() ||
        comparators.size() != losses.size()) {
      throw std::invalid_argument("ledger is misaligned");
    }
  }

  double max_abs_loss() const {
    double g = 0.0;
    for (double v : losses) g = std::max(g, std::abs(v));
    return g;
  }

  double path_length() const {
    double p = 0.0;
    for (std::size_t t = 1; t < comparators.size(); ++t) {
      p += std::abs(comparators[t] - comparators[t - 1]);
    }
    return p;
  }

  // max_{t in [1,tau]} |Delta_t|; needs play_after_last when tau = T.
  double max_abs_play(long tau) const {
    double m = 0.0;
    for (long t = 1; t < std::min(tau + 1, horizon()); ++t) {
      m = std::max(m, std::abs(plays[t]));
    }
    if (tau >= horizon()) {
      if (!play_after_last) {
        throw std::invalid_argument(
            "ledger lacks the play after the final loss");
      }
      m = std::max(m, std::abs(*play_after_last));
    }
    return m;
  }
};

// Builds a ledger from a full learner run (plays Delta_0..Delta_T as
// returned by run_learner).
inline RegretLedger make_ledger(std::span<const double> losses,
                                std::span<const double> plays,
                                std::span<const double> comparators) {
  if (plays.size() != losses.size() + 1 ||
      comparators.size() != losses.size()) {
    throw std::invalid_argument("make_ledger: misaligned inputs");
  }
  RegretLedger ledger;
  ledger.losses.assign(losses.begin(), losses.end());
  ledger.plays.assign(plays.begin(), plays.end() - 1);
  ledger.comparators.assign(comparators.begin(), comparators.end());
  ledger.play_after_last = plays.back();
  return ledger;
}

/// Interval decomposition of [1,T] with one representative comparator per
/// interval.
struct Partition {
  std::vector<std::pair<long, long>> intervals;  // 1-based, inclusive
  std::vector<double> reps;

  void validate(long T) const {
    if (intervals.empty() || reps.size() != intervals.size()) {
      throw std::invalid_argument("partition/reps size mismatch");
    }
    if (intervals.front().first != 1 || intervals.back().second != T) {
      throw std::invalid_argument("partition does not cover [1,T]");
    }
    for (std::size_t i = 0; i < intervals.size(); ++i) {
      if (intervals[i].first > intervals[i].second) {
        throw std::invalid_argument("partition has an empty interval");
      }
      if (i + 1 < intervals.size() &&
          intervals[i + 1].first != intervals[i].second + 1) {
        throw std::invalid_argument("partition intervals are not contiguous");
      }
    }
  }
};

// Random partition via a Bernoulli(1/8) cut at each t; reps ~ Unif[-u_max, u_max].
inline Partition draw_partition(Rng& rng, long T, double u_max) {
  Partition p;
  long start = 1;
  for (long t = 1; t < T; ++t) {
    if (rng.bernoulli(0.125)) {
      p.intervals.emplace_back(start, t);
      start = t + 1;
    }
  }
  p.intervals.emplace_back(start, T);
  for (std::size_t i = 0; i < p.intervals.size(); ++i) {
    p.reps.push_back(rng.uniform(-u_max, u_max));
  }
  return p;
}

// Dynamic regret sum_{t=1}^T v_t (Delta_{t-1} - u_{t-1}); static regret is
// the constant-comparator special case.
inline double dynamic_regret(const RegretLedger& ledger) {
  ledger.validate();
  double acc = 0.0;
  for (std::size_t t = 0; t < ledger.losses.size(); ++t) {
    acc += ledger.losses[t] * (ledger.plays[t] - ledger.comparators[t]);
  }
  return acc;
}

// beta-discounted regret R_{T;beta}(u) = sum_{t<=T} beta^(T-t) v_t (Delta_{t-1} - u).
// T = 0 is the empty sum.
inline double discounted_regret(const RegretLedger& ledger, double u,
                                double beta, long T) {
  if (T < 0 || T > ledger.horizon()) {
    throw std::out_of_range("discounted_regret: T out of range");
  }
  double acc = 0.0;
  for (long t = 1; t <= T; ++t) {
    acc = beta * acc + ledger.losses[t - 1] * (ledger.plays[t - 1] - u);
  }
  return acc;
}

// Four-term right-hand side of the discounted-to-dynamic conversion. The
// conversion is an identity: for any ledger, partition, reps and beta this
// equals dynamic_regret(ledger) exactly.
inline double conversion_rhs(const RegretLedger& ledger,
                             const Partition& partition, double beta) {
  ledger.validate();
  const long T = ledger.horizon();
  partition.validate(T);
  const std::size_t N = partition.intervals.size();

  // A_t = sum_{s<=t} beta^(t-s) v_s Delta_{s-1},  B_t = sum_{s<=t} beta^(t-s) v_s,
  // so R_{t;beta}(u) = A_t - u B_t for any u.
  std::vector<double> A(std::size_t(T) + 1, 0.0), B(std::size_t(T) + 1, 0.0);
  for (long t = 1; t <= T; ++t) {
    A[t] = beta * A[t - 1] + ledger.losses[t - 1] * ledger.plays[t - 1];
    B[t] = beta * B[t - 1] + ledger.losses[t - 1];
  }

  double total = beta * (A[T] - partition.reps[N - 1] * B[T]);
  for (std::size_t i = 0; i < N; ++i) {
    const auto [a, b] = partition.intervals[i];
    const double rep = partition.reps[i];
    for (long t = a; t <= b; ++t) {
      total += (1.0 - beta) * (A[t] - rep * B[t]);
      total += ledger.losses[t - 1] * (rep - ledger.comparators[t - 1]);
    }
    if (i + 1 < N) {
      total += beta * B[b] * (partition.reps[i + 1] - rep);
    }
  }
  return total;
}

// Static regret bound of scale-free FTRL:
//   (u^2/(2 alpha) + sqrt(2) alpha) sqrt(sum v_t^2)
//     + 2 max_{t in [1,T]} |Delta_t| * max_t |v_t|.
inline double bound_static_scale_free(const RegretLedger& ledger, double alpha,
                                      double u) {
  ledger.validate();
  double sum_sq = 0.0;
  for (double v : ledger.losses) sum_sq += v * v;
  return (u * u / (2.0 * alpha) + std::sqrt(2.0) * alpha) * std::sqrt(sum_sq) +
         2.0 * ledger.max_abs_play(ledger.horizon()) * ledger.max_abs_loss();
}

// Discounted regret bound of beta-FTRL, anytime in T:
//   (u^2/(2 alpha) + sqrt(2) alpha) sqrt(V_beta(v_{1:T}))
//     + 2 max_{t in [1,T]} |Delta_t| * max_{t in [1,T]} |beta^(T-t) v_t|.
inline double bound_discounted(const RegretLedger& ledger, double alpha,
                               double u, double beta, long T) {
  if (T < 1 || T > ledger.horizon()) {
    throw std::out_of_range("bound_discounted: T out of range");
  }
  double var = 0.0, max_disc = 0.0;
  for (long t = 1; t <= T; ++t) {
    var = beta * beta * var + ledger.losses[t - 1] * ledger.losses[t - 1];
    max_disc = std::max(beta * max_disc, std::abs(ledger.losses[t - 1]));
  }
  return (u * u / (2.0 * alpha) + std::sqrt(2.0) * alpha) * std::sqrt(var) +
         2.0 * ledger.max_abs_play(T) * max_disc;
}

// Explicit dynamic regret bound of beta-FTRL on an unbounded domain, for
// comparators with |u_t| <= alpha * M:
//   (alpha M^2 / 2 + sqrt(2) alpha) (G/sqrt(1-beta) + sqrt(1-beta) G T)
//     + 2 alpha M G (1 + (1-beta) T) + M G P / sqrt(1-beta).
inline double bound_dynamic_unbounded(const RegretLedger& ledger, double alpha,
                                      double beta, double m) {
  if (!(beta < 1.0)) {
    throw std::invalid_argument("bound_dynamic_unbounded requires beta < 1");
  }
  ledger.validate();
  const double g = ledger.max_abs_loss();
  const double p = ledger.path_length();
  const double T = double(ledger.horizon());
  const double root = std::sqrt(1.0 - beta);
  return (alpha * m * m / 2.0 + std::sqrt(2.0) * alpha) *
             (g / root + root * g * T) +
         2.0 * alpha * m * g * (1.0 + (1.0 - beta) * T) + m * g * p / root;
}

// Explicit dynamic regret bound of clipped beta-FTRL with alpha = D, for
// comparators with |u_t| <= D:
//   4 D G (1/sqrt(1-beta) + sqrt(1-beta) T) + G P / (1-beta).
inline double bound_dynamic_clipped(const RegretLedger& ledger, double d,
                                    double beta) {
  if (!(beta < 1.0)) {
    throw std::invalid_argument("bound_dynamic_clipped requires beta < 1");
  }
  ledger.validate();
  const double g = ledger.max_abs_loss();
  const double p = ledger.path_length();
  const double T = double(ledger.horizon());
  const double root = std::sqrt(1.0 - beta);
  return 4.0 * d * g * (1.0 / root + root * T) + g * p / (1.0 - beta);
}

}  // namespace olu
