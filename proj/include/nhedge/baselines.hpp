#pragma once

#include <Eigen/Core>

#include <cmath>
#include <string>

#include "nhedge/learner_state.hpp"

namespace nhedge {

/// Exponential weights with the time-adaptive rate eta_t = sqrt(8 ln(N) / t).
template <typename Scalar = double>
struct ExpConfig {
  Eigen::Index num_actions = 2;

  Scalar learning_rate(long t) const {
    if (t < 1) throw ConfigError("ExpConfig: learning rate defined for t >= 1");
    return std::sqrt(Scalar(8) * std::log(Scalar(num_actions)) / Scalar(t));
  }
};

/// Polynomial weights with exponent p = 2 ln N.
template <typename Scalar = double>
struct PolyConfig {
  Eigen::Index num_actions = 2;
  Scalar exponent = Scalar(2) * std::log(Scalar(2));

  static PolyConfig for_actions(Eigen::Index n) {
    return {n, Scalar(2) * std::log(Scalar(n))};
  }
};

/// Softmax weights proportional to exp(eta * R_i), max-shifted.
template <typename Derived, typename Out>
void exp_weights(const Eigen::MatrixBase<Derived>& regrets, typename Derived::Scalar eta,
                 Eigen::MatrixBase<Out>& weights) {
  const auto scaled = (regrets.array() * eta).eval();
  weights.derived() = (scaled - scaled.maxCoeff()).exp().matrix();
  weights /= weights.sum();
}

/// Weights proportional to ([R_i]_+)^(p-1), computed in the log domain.
/// Uniform when no regret is positive.
template <typename Derived, typename Out>
void poly_weights(const Eigen::MatrixBase<Derived>& regrets, typename Derived::Scalar p,
                  Eigen::MatrixBase<Out>& weights) {
  using Scalar = typename Derived::Scalar;
  const Scalar r_max = regrets.maxCoeff();
  if (!(r_max > Scalar(0))) {
    weights.setConstant(Scalar(1) / Scalar(weights.size()));
    return;
  }
  // (R_i / R_max)^(p-1) for R_i > 0, exactly zero otherwise.
  weights.derived() = (regrets.array() > Scalar(0))
                          .select(((regrets.array() / r_max).log() * (p - Scalar(1))).exp(), Scalar(0))
                          .matrix();
  weights /= weights.sum();
}

template <typename Scalar, typename Derived>
RoundOutcome<Scalar> exp_advance(LearnerState<Scalar>& state, const Eigen::MatrixBase<Derived>& losses,
                                 const ExpConfig<Scalar>& cfg) {
  if (cfg.num_actions != state.num_actions()) throw ConfigError("exp_advance: config/state size mismatch");
  RoundOutcome<Scalar> out = detail::play_round(state, losses);
  exp_weights(state.regrets, cfg.learning_rate(state.round + 1), state.weights);
  return out;
}

template <typename Scalar, typename Derived>
RoundOutcome<Scalar> poly_advance(LearnerState<Scalar>& state, const Eigen::MatrixBase<Derived>& losses,
                                  const PolyConfig<Scalar>& cfg) {
  if (cfg.num_actions != state.num_actions()) throw ConfigError("poly_advance: config/state size mismatch");
  if (!(cfg.exponent > Scalar(1))) throw ConfigError("poly_advance: exponent must exceed 1");
  RoundOutcome<Scalar> out = detail::play_round(state, losses);
  poly_weights(state.regrets, cfg.exponent, state.weights);
  return out;
}

}  // namespace nhedge
