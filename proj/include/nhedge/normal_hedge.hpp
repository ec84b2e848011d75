#pragma once

#include <Eigen/Core>

#include "nhedge/learner_state.hpp"
#include "nhedge/scale.hpp"

namespace nhedge {

/// Weights proportional to the x-derivative of the potential at (regrets, c).
/// The exponent is shifted by its maximum before exponentiation; the shift and
/// the 1/c factor cancel under normalization. Writes uniform weights when no
/// regret is positive.
template <typename Derived, typename Out>
void normal_hedge_weights(const Eigen::MatrixBase<Derived>& regrets, typename Derived::Scalar c,
                          Eigen::MatrixBase<Out>& weights) {
  using Scalar = typename Derived::Scalar;
  const auto positive = regrets.array().max(Scalar(0)).eval();
  const auto exponent = (positive.square() / (Scalar(2) * c)).eval();
  const Scalar shift = exponent.maxCoeff();
  weights.derived() = (positive * (exponent - shift).exp()).matrix();
  const Scalar total = weights.sum();
  if (total > Scalar(0)) {
    weights /= total;
  } else {
    weights.setConstant(Scalar(1) / Scalar(weights.size()));
  }
}

/// One NormalHedge round: play, update regrets, re-solve the scale and reweight.
///
/// If no regret is positive after the update, the previous scale is kept and the
/// next round is played uniformly.
template <typename Scalar, typename Derived>
RoundOutcome<Scalar> advance(LearnerState<Scalar>& state, const Eigen::MatrixBase<Derived>& losses) {
  RoundOutcome<Scalar> out = detail::play_round(state, losses);
  out.new_scale = solve_scale(state.regrets);
  if (out.new_scale) {
    state.scale = out.new_scale;
    normal_hedge_weights(state.regrets, *out.new_scale, state.weights);
  } else {
    detail::set_uniform(state.weights);
  }
  return out;
}

}  // namespace nhedge
