#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "olu/moments.hpp"
#include "olu/numeric.hpp"

namespace olu {

enum class LearnerKind {
  ogd,
  no_momentum_sgd,
  no_momentum_adagrad,
  scale_free_ftrl,
  discounted_ftrl,
  discounted_ftrl_clipped,
};

inline const char* to_string(LearnerKind k) {
  switch (k) {
    case LearnerKind::ogd: return "OGD";
    case LearnerKind::no_momentum_sgd: return "NoMomentumSGD";
    case LearnerKind::no_momentum_adagrad: return "NoMomentumAdaGrad";
    case LearnerKind::scale_free_ftrl: return "ScaleFreeFTRL";
    case LearnerKind::discounted_ftrl: return "DiscountedFTRL";
    case LearnerKind::discounted_ftrl_clipped: return "DiscountedFTRLClipped";
  }
  return "?";
}

/// One-dimensional online learner configuration.
///
/// alpha is the scaled learning rate of the FTRL family; when gamma (the
/// original Adam learning rate) is supplied instead, it converts as
/// alpha = gamma * (1 - beta1) / sqrt(1 - beta2^2), which needs beta2 < 1.
/// alpha_schedule, when set, supplies a time-varying alpha_t (t is 1-based)
/// and overrides the constant.
struct LearnerConfig {
  LearnerKind kind = LearnerKind::scale_free_ftrl;
  double alpha = 1.0;
  std::function<double(long)> alpha_schedule;
  double eta = 0.0;                  // OGD / no-momentum SGD step size
  double beta1 = 1.0;
  double beta2 = 1.0;
  double clip_d = 0.0;               // clipped kind only
  std::optional<double> gamma;       // converts to alpha when present
  std::optional<double> ogd_domain;  // projection radius; OGD unprojected if absent

  bool is_ftrl() const {
    return kind == LearnerKind::scale_free_ftrl ||
           kind == LearnerKind::discounted_ftrl ||
           kind == LearnerKind::discounted_ftrl_clipped;
  }

  double alpha_from_gamma() const {
    if (beta2 >= 1.0) {
      throw std::invalid_argument(
          "gamma -> alpha conversion requires beta2 < 1");
    }
    return *gamma * (1.0 - beta1) / std::sqrt(1.0 - beta2 * beta2);
  }

  double alpha_at(long t) const {
    if (alpha_schedule) return alpha_schedule(t);
    if (gamma) return alpha_from_gamma();
    return alpha;
  }

  void validate() const {
    // Step sizes may be zero (a zero rate degenerates to the constant-zero
    // play, which some diagnostics rely on) but never negative or non-finite.
    auto step_size = [](double x, const char* what) {
      if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument(std::string(what) +
                                    " must be a nonnegative real");
      }
    };
    switch (kind) {
      case LearnerKind::ogd:
        step_size(eta, "eta");
        break;
      case LearnerKind::no_momentum_sgd:
        if (!alpha_schedule) step_size(eta, "eta");
        break;
      case LearnerKind::no_momentum_adagrad:
      case LearnerKind::scale_free_ftrl:
        if (!alpha_schedule) step_size(alpha, "alpha");
        break;
      case LearnerKind::discounted_ftrl:
      case LearnerKind::discounted_ftrl_clipped:
        if (gamma) {
          step_size(*gamma, "gamma");
          alpha_from_gamma();  // throws when beta2 = 1
        } else if (!alpha_schedule) {
          step_size(alpha, "alpha");
        }
        if (!(beta1 > 0.0 && beta1 <= 1.0) || !(beta2 > 0.0 && beta2 <= 1.0)) {
          throw std::invalid_argument("beta1, beta2 must lie in (0,1]");
        }
        if (kind == LearnerKind::discounted_ftrl_clipped &&
            !(clip_d > 0.0 && std::isfinite(clip_d))) {
          throw std::invalid_argument("clipD must be positive");
        }
        break;
    }
    if (ogd_domain && !(*ogd_domain > 0.0)) {
      throw std::invalid_argument("OGD domain radius must be positive");
    }
  }
};

inline LearnerConfig make_ogd(double eta,
                              std::optional<double> domain = std::nullopt) {
  LearnerConfig c;
  c.kind = LearnerKind::ogd;
  c.eta = eta;
  c.ogd_domain = domain;
  return c;
}

inline LearnerConfig make_sgd(double eta) {
  LearnerConfig c;
  c.kind = LearnerKind::no_momentum_sgd;
  c.eta = eta;
  return c;
}

inline LearnerConfig make_adagrad(double alpha) {
  LearnerConfig c;
  c.kind = LearnerKind::no_momentum_adagrad;
  c.alpha = alpha;
  return c;
}

inline LearnerConfig make_scale_free(double alpha) {
  LearnerConfig c;
  c.kind = LearnerKind::scale_free_ftrl;
  c.alpha = alpha;
  return c;
}

inline LearnerConfig make_discounted(double alpha, double beta1,
                                     double beta2) {
  LearnerConfig c;
  c.kind = LearnerKind::discounted_ftrl;
  c.alpha = alpha;
  c.beta1 = beta1;
  c.beta2 = beta2;
  return c;
}

inline LearnerConfig make_clipped(double alpha, double beta, double clip_d) {
  LearnerConfig c;
  c.kind = LearnerKind::discounted_ftrl_clipped;
  c.alpha = alpha;
  c.beta1 = beta;
  c.beta2 = beta;
  c.clip_d = clip_d;
  return c;
}

struct LearnerState {
  DiscountedMoments moments;  // FTRL kinds (beta1 = beta2 = 1 for scale-free)
  double sum_sq = 0.0;        // AdaGrad accumulator sum v_s^2
  double last_play = 0.0;     // Delta_{t-1}
  long t = 0;
};

inline LearnerState learner_init(const LearnerConfig& config) {
  config.validate();
  LearnerState s;
  if (config.is_ftrl()) {
    s.moments.beta1 =
        config.kind == LearnerKind::scale_free_ftrl ? 1.0 : config.beta1;
    s.moments.beta2 =
        config.kind == LearnerKind::scale_free_ftrl ? 1.0 : config.beta2;
  }
  return s;
}

/// Folds the revealed loss v into the state and returns the next play
/// Delta_t. All ratio updates resolve 0/0 to 0.
inline double learner_step(LearnerState& state, const LearnerConfig& config,
                           double v) {
  require_finite(v, "loss");
  state.t += 1;
  const long t = state.t;
  double play = 0.0;
  switch (config.kind) {
    case LearnerKind::ogd: {
      play = state.last_play - config.eta * v;
      if (config.ogd_domain) play = clip_sym(play, *config.ogd_domain);
      break;
    }
    case LearnerKind::no_momentum_sgd: {
      // The generic no-momentum family Delta_t = -alpha_t * v_t; plain SGD
      // is the constant schedule alpha_t = eta.
      play = -(config.alpha_schedule ? config.alpha_schedule(t) : config.eta) * v;
      break;
    }
    case LearnerKind::no_momentum_adagrad: {
      state.sum_sq += v * v;
      play = -config.alpha_at(t) * safe_ratio(v, std::sqrt(state.sum_sq));
      break;
    }
    case LearnerKind::scale_free_ftrl:
    case LearnerKind::discounted_ftrl:
    case LearnerKind::discounted_ftrl_clipped: {
      state.moments = moments_update(state.moments, v);
      play = -config.alpha_at(t) *
             safe_ratio(state.moments.m, std::sqrt(state.moments.q));
      if (config.kind == LearnerKind::discounted_ftrl_clipped) {
        play = clip_sym(play, config.clip_d);
      }
      break;
    }
  }
  state.last_play = play;
  return play;
}

/// Runs a learner over v_1..v_T and returns the play sequence
/// Delta_0..Delta_T (T+1 entries, Delta_0 = 0). Delta_T, the play after the
/// final loss, is what the regret bounds' max_t |Delta_t| references.
inline std::vector<double> run_learner(const LearnerConfig& config,
                                       std::span<const double> losses) {
  LearnerState state = learner_init(config);
  std::vector<double> plays;
  plays.reserve(losses.size() + 1);
  plays.push_back(0.0);
  for (double v : losses) plays.push_back(learner_step(state, config, v));
  return plays;
}

/// True iff the play sequence on k*v matches the play sequence on v within
/// rel 1e-10 (scale-freeness of the FTRL family; clipping commutes since the
/// ratio itself is scale-free).
inline bool scale_invariance_check(const LearnerConfig& config,
                                   std::span<const double> losses, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("scale factor must be positive and finite");
  }
  std::vector<double> scaled(losses.begin(), losses.end());
  for (double& v : scaled) v *= k;
  const auto base = run_learner(config, losses);
  const auto rescaled = run_learner(config, scaled);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (!rel_close(base[i], rescaled[i], 1e-10, 1e-12)) return false;
  }
  return true;
}

/// d independent 1-D learners stepped in lockstep; pure plumbing around the
/// coordinate-wise update.
class VectorLearner {
 public:
  VectorLearner(const LearnerConfig& config, int dim)
      : config_(config), states_(std::size_t(dim), learner_init(config)) {}

  int dim() const { return int(states_.size()); }

  // Current play as a function of the losses seen so far.
  std::vector<double> play() const {
    std::vector<double> out(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
      out[i] = states_[i].last_play;
    }
    return out;
  }

  void observe(std::span<const double> v) {
    if (int(v.size()) != dim()) {
      throw std::invalid_argument("loss dimension != learner dimension");
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
      learner_step(states_[i], config_, v[i]);
    }
  }

 private:
  LearnerConfig config_;
  std::vector<LearnerState> states_;
};

}  // namespace olu
