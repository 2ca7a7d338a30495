#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "olu/numeric.hpp"

namespace olu {

/// Per-coordinate discounted gradient statistics.
///
/// After t updates with inputs g_1..g_t,
///   m = sum_{s<=t} beta1^(t-s) g_s,
///   q = sum_{s<=t} (beta2^(t-s) g_s)^2,
/// maintained by recurrence (m <- beta1*m + g, q <- beta2^2*q + g^2) rather
/// than by rescaling losses as beta^(-t), which overflows doubles near
/// t ~ 7000 for beta = 0.9.
struct DiscountedMoments {
  double m = 0.0;
  double q = 0.0;
  long t = 0;
  double beta1 = 1.0;
  double beta2 = 1.0;
};

inline DiscountedMoments moments_update(DiscountedMoments state, double g) {
  require_finite(g, "gradient");
  state.m = state.beta1 * state.m + g;
  state.q = state.beta2 * state.beta2 * state.q + g * g;
  state.t += 1;
  return state;
}

// Discounted variance V_beta(v_{1:t}) = sum_{s<=t} (beta^(t-s) v_s)^2.
// Computed by the recurrence V <- beta^2 V + v^2, so the append identity
// V_beta(v_{1:t+1}) = beta^2 V_beta(v_{1:t}) + v_{t+1}^2 is bit-exact.
inline double discounted_variance(std::span<const double> v, double beta,
                                  long t) {
  if (t < 1 || t > long(v.size())) {
    throw std::out_of_range("discounted_variance: t out of range");
  }
  double acc = 0.0;
  for (long s = 0; s < t; ++s) acc = beta * beta * acc + v[s] * v[s];
  return acc;
}

// M = max_{t in [1,T]} |sum_{s<=t} beta^(t-s) v_s| / sqrt(V_beta(v_{1:t})),
// with 0/0 taken as 0. Cauchy-Schwarz gives M <= sqrt(T) for every beta;
// no tighter beta-dependent ceiling holds in general (a constant stream
// drives the ratio toward sqrt((1+beta)/(1-beta))).
inline double m_ratio(std::span<const double> v, double beta, long T) {
  if (T < 1 || T > long(v.size())) {
    throw std::out_of_range("m_ratio: T out of range");
  }
  double num = 0.0, den = 0.0, best = 0.0;
  for (long s = 0; s < T; ++s) {
    num = beta * num + v[s];
    den = beta * beta * den + v[s] * v[s];
    double r = safe_ratio(std::abs(num), std::sqrt(den));
    if (r > best) best = r;
  }
  return best;
}

}  // namespace olu
