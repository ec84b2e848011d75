#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nhedge/errors.hpp"
#include "nhedge/learner_state.hpp"

namespace nhedge {

namespace detail {

inline void check_quantile(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw ConfigError("quantile must lie in (0, 1], got " + std::to_string(q));
}

// 1-based rank floor(q N), clamped to [1, N].
inline Eigen::Index quantile_rank(double q, Eigen::Index n) {
  const auto j = static_cast<Eigen::Index>(std::floor(q * static_cast<double>(n)));
  return std::clamp<Eigen::Index>(j, 1, n);
}

}  // namespace detail

/// Regret of the learner to the top-q quantile of actions: learner loss minus
/// the floor(qN)-th smallest cumulative action loss (1-based; rank clamped to 1
/// so any q < 1/N means the best action).
template <typename Derived>
typename Derived::Scalar quantile_regret(const Eigen::MatrixBase<Derived>& action_cumloss,
                                         typename Derived::Scalar learner_cumloss, double quantile) {
  detail::check_quantile(quantile);
  const Eigen::Index n = action_cumloss.size();
  if (n < 1) throw ConfigError("quantile_regret: empty loss vector");
  const Eigen::Index j = detail::quantile_rank(quantile, n);
  Vector<typename Derived::Scalar> sorted = action_cumloss;
  std::nth_element(sorted.begin(), sorted.begin() + (j - 1), sorted.end());
  return learner_cumloss - sorted[j - 1];
}

struct BoundParams {
  long t = 0;
  long num_actions = 2;
  double quantile = 1.0;
  double delta = 0.5;

  void validate() const {
    if (t < 0) throw ConfigError("BoundParams: t must be nonnegative");
    if (num_actions < 2) throw ConfigError("BoundParams: need N >= 2");
    detail::check_quantile(quantile);
    if (!(delta > 0.0 && delta <= 0.5)) throw ConfigError("BoundParams: delta must lie in (0, 1/2]");
  }
};

/// Regret bound to the top-quantile for NormalHedge after t rounds:
///   sqrt((1 + ln(1/q)) * (3 (1 + 50 delta) t + (16 ln^2 N / delta) (10.2 / delta^2 + ln N)))
inline double theorem1_bound(const BoundParams& p) {
  p.validate();
  const double ln_n = std::log(static_cast<double>(p.num_actions));
  const double growth = 3.0 * (1.0 + 50.0 * p.delta) * static_cast<double>(p.t);
  const double warmup = 16.0 * ln_n * ln_n / p.delta * (10.2 / (p.delta * p.delta) + ln_n);
  return std::sqrt((1.0 + std::log(1.0 / p.quantile)) * (growth + warmup));
}

/// Regret to the top-quantile implied by the current scale: sqrt(2 c (ln(1/q) + 1)).
/// With q = 1/N this bounds the regret to the best action.
inline double lemma1_bound(double scale, double quantile) {
  if (!(scale > 0.0)) throw std::domain_error("lemma1_bound: scale must be positive");
  detail::check_quantile(quantile);
  return std::sqrt(2.0 * scale * (std::log(1.0 / quantile) + 1.0));
}

/// Leading term sqrt(3 t (1 + ln(1/q))) of the large-t regret bound.
inline double asymptotic_bound(long t, double quantile) {
  if (t < 0) throw ConfigError("asymptotic_bound: t must be nonnegative");
  detail::check_quantile(quantile);
  return std::sqrt(3.0 * static_cast<double>(t) * (1.0 + std::log(1.0 / quantile)));
}

/// Spread max - min of a loss vector; bound checks assume it is at most 1.
template <typename Derived>
typename Derived::Scalar loss_spread(const Eigen::MatrixBase<Derived>& losses) {
  return losses.maxCoeff() - losses.minCoeff();
}

/// Running cumulative losses for one learner run.
template <typename Scalar = double>
class RegretTracker {
 public:
  explicit RegretTracker(Eigen::Index num_actions) : action_cumloss_(Vector<Scalar>::Zero(num_actions)) {}

  template <typename Derived>
  void record(Scalar learner_loss, const Eigen::MatrixBase<Derived>& losses) {
    learner_cumloss_ += learner_loss;
    action_cumloss_ += losses;
    max_spread_ = std::max(max_spread_, loss_spread(losses));
    ++rounds_;
  }

  long rounds() const { return rounds_; }
  Scalar learner_cumloss() const { return learner_cumloss_; }
  const Vector<Scalar>& action_cumloss() const { return action_cumloss_; }

  Scalar regret_best() const { return learner_cumloss_ - action_cumloss_.minCoeff(); }
  Scalar regret_quantile(double q) const { return quantile_regret(action_cumloss_, learner_cumloss_, q); }

  /// False once any round had a loss spread above 1, which voids the bounds.
  bool bound_assumption_holds() const { return max_spread_ <= Scalar(1); }

 private:
  Vector<Scalar> action_cumloss_;
  Scalar learner_cumloss_{};
  Scalar max_spread_{};
  long rounds_ = 0;
};

/// Per-round trace of a run: learner cumulative loss, best-action regret,
/// quantile regrets and scale.
struct RegretReport {
  long rounds = 0;
  std::vector<double> learner_cumloss;
  std::vector<double> regret_best;
  std::vector<double> quantiles;
  std::vector<std::vector<double>> regret_quantile;  // [quantile index][round]
  std::vector<std::optional<double>> scale_trace;
  bool assumption_violated = false;
};

}  // namespace nhedge
