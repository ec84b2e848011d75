#pragma once

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <string>

#include "nhedge/errors.hpp"

namespace nhedge {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-learner bookkeeping shared by NormalHedge and the baselines.
///
/// `weights` is the distribution that will be played in the next round.
/// `scale` stays empty until some cumulative regret becomes positive.
template <typename Scalar = double>
struct LearnerState {
  Vector<Scalar> regrets;
  Vector<Scalar> weights;
  std::optional<Scalar> scale;
  long round = 0;

  Eigen::Index num_actions() const { return regrets.size(); }
};

template <typename Scalar = double>
struct RoundOutcome {
  Scalar learner_loss{};
  Vector<Scalar> instantaneous_regrets;
  std::optional<Scalar> new_scale;
};

/// Fresh state: zero regrets, uniform weights, no scale.
template <typename Scalar = double>
LearnerState<Scalar> init(Eigen::Index num_actions) {
  if (num_actions < 2) {
    throw ConfigError("init: need at least two actions, got " + std::to_string(num_actions));
  }
  LearnerState<Scalar> state;
  state.regrets = Vector<Scalar>::Zero(num_actions);
  state.weights = Vector<Scalar>::Constant(num_actions, Scalar(1) / Scalar(num_actions));
  return state;
}

namespace detail {

// Steps 1-3 of a round, common to every learner: play the current weights,
// charge the expected loss and accumulate regrets.
template <typename Scalar, typename Derived>
RoundOutcome<Scalar> play_round(LearnerState<Scalar>& state,
                                const Eigen::MatrixBase<Derived>& losses) {
  if (losses.size() != state.num_actions()) {
    throw ConfigError("loss vector has " + std::to_string(losses.size()) + " entries, expected " +
                      std::to_string(state.num_actions()));
  }
  if (!losses.allFinite()) throw InputError("loss vector contains non-finite entries");

  RoundOutcome<Scalar> out;
  out.learner_loss = state.weights.dot(losses);
  out.instantaneous_regrets = (-losses.array() + out.learner_loss).matrix();
  state.regrets += out.instantaneous_regrets;
  ++state.round;
  return out;
}

template <typename Scalar>
void set_uniform(Vector<Scalar>& weights) {
  weights.setConstant(Scalar(1) / Scalar(weights.size()));
}

}  // namespace detail
}  // namespace nhedge
