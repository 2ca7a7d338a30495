#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace olu {
namespace reference {

// Verification-only reference paths. Nothing here belongs in a hot loop: the
// literal up-scaled-loss form overflows doubles once beta^(-t) grows past
// ~1e308 (t ~ 7000 at beta = 0.9), which is exactly why the shipped learners
// run on recurrences. These evaluate in long double and refuse horizons
// beyond 500 steps.

inline constexpr long kMaxHorizon = 500;

// Direct O(t) discounted sums: m = sum beta1^(t-s) g_s, q = sum (beta2^(t-s) g_s)^2.
inline std::pair<long double, long double> direct_discounted_sums(
    std::span<const double> g, double beta1, double beta2) {
  const long t = long(g.size());
  long double m = 0.0L, q = 0.0L;
  for (long s = 1; s <= t; ++s) {
    const long double w1 = std::pow((long double)beta1, (long double)(t - s));
    const long double w2 = std::pow((long double)beta2, (long double)(t - s));
    m += w1 * g[s - 1];
    q += (w2 * g[s - 1]) * (w2 * g[s - 1]);
  }
  return {m, q};
}

// Direct O(t) discounted variance sum (beta^(t-s) v_s)^2 for s <= t.
inline long double direct_discounted_variance(std::span<const double> v,
                                              double beta, long t) {
  long double acc = 0.0L;
  for (long s = 1; s <= t; ++s) {
    const long double w = std::pow((long double)beta, (long double)(t - s));
    acc += (w * v[s - 1]) * (w * v[s - 1]);
  }
  return acc;
}

/// FTRL run literally on the up-scaled losses v_t <- beta1^(-t) g_t with
/// step size eta_t = alpha (beta1/beta2)^t / sqrt(sum_s (beta2^(-s) g_s)^2),
/// the defining form of the discounted learner. Returns plays Delta_1..Delta_T.
/// Requires T <= 500 and beta1 <= beta2 (the (beta1/beta2)^t factor grows
/// without bound otherwise).
inline std::vector<double> literal_scaled_loss_ftrl(
    std::span<const double> g, double alpha, double beta1, double beta2) {
  const long T = long(g.size());
  if (T > kMaxHorizon) {
    throw std::invalid_argument("literal oracle is restricted to T <= 500");
  }
  if (beta1 > beta2) {
    throw std::invalid_argument("literal oracle requires beta1 <= beta2");
  }
  std::vector<double> plays;
  plays.reserve(std::size_t(T));
  long double scaled_sum = 0.0L;   // sum_s beta1^(-s) g_s
  long double scaled_var = 0.0L;   // sum_s (beta2^(-s) g_s)^2
  long double inv1 = 1.0L, inv2 = 1.0L, ratio12 = 1.0L;
  for (long t = 1; t <= T; ++t) {
    inv1 /= beta1;
    inv2 /= beta2;
    ratio12 *= (long double)beta1 / beta2;
    scaled_sum += inv1 * g[t - 1];
    scaled_var += (inv2 * g[t - 1]) * (inv2 * g[t - 1]);
    if (scaled_var == 0.0L) {
      plays.push_back(0.0);
      continue;
    }
    const long double eta = alpha * ratio12 / std::sqrt(scaled_var);
    plays.push_back(double(-eta * scaled_sum));
  }
  return plays;
}

}  // namespace reference
}  // namespace olu
