#pragma once

#include <Eigen/Core>

#include <optional>
#include <string_view>

#include "nhedge/analytics.hpp"
#include "nhedge/baselines.hpp"
#include "nhedge/normal_hedge.hpp"

namespace nhedge {

enum class LearnerKind { NormalHedge, ExpTimeAdaptive, PolyWeights };

inline std::string_view to_string(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::NormalHedge:
      return "normalhedge";
    case LearnerKind::ExpTimeAdaptive:
      return "exp-time-adaptive";
    case LearnerKind::PolyWeights:
      return "poly";
  }
  return "unknown";
}

inline std::optional<LearnerKind> parse_learner(std::string_view name) {
  for (auto kind : {LearnerKind::NormalHedge, LearnerKind::ExpTimeAdaptive, LearnerKind::PolyWeights}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

/// A learner of any supported kind behind one round-advance call.
template <typename Scalar = double>
class Learner {
 public:
  Learner(LearnerKind kind, Eigen::Index num_actions)
      : kind_(kind),
        state_(init<Scalar>(num_actions)),
        exp_{num_actions},
        poly_(PolyConfig<Scalar>::for_actions(num_actions)) {}

  template <typename Derived>
  RoundOutcome<Scalar> step(const Eigen::MatrixBase<Derived>& losses) {
    switch (kind_) {
      case LearnerKind::ExpTimeAdaptive:
        return exp_advance(state_, losses, exp_);
      case LearnerKind::PolyWeights:
        return poly_advance(state_, losses, poly_);
      case LearnerKind::NormalHedge:
        break;
    }
    return advance(state_, losses);
  }

  LearnerKind kind() const { return kind_; }
  const LearnerState<Scalar>& state() const { return state_; }

 private:
  LearnerKind kind_;
  LearnerState<Scalar> state_;
  ExpConfig<Scalar> exp_;
  PolyConfig<Scalar> poly_;
};

/// Runs a learner over every column of `losses` and records the full per-round
/// regret trace.
template <typename Derived>
RegretReport trace_run(LearnerKind kind, const Eigen::MatrixBase<Derived>& losses,
                       const std::vector<double>& quantiles = {}) {
  using Scalar = typename Derived::Scalar;
  Learner<Scalar> learner(kind, losses.rows());
  RegretTracker<Scalar> tracker(losses.rows());
  RegretReport report;
  report.quantiles = quantiles;
  report.regret_quantile.resize(quantiles.size());
  for (Eigen::Index t = 0; t < losses.cols(); ++t) {
    const auto out = learner.step(losses.col(t));
    tracker.record(out.learner_loss, losses.col(t));
    report.learner_cumloss.push_back(static_cast<double>(tracker.learner_cumloss()));
    report.regret_best.push_back(static_cast<double>(tracker.regret_best()));
    for (std::size_t q = 0; q < quantiles.size(); ++q) {
      report.regret_quantile[q].push_back(static_cast<double>(tracker.regret_quantile(quantiles[q])));
    }
    const auto& scale = learner.state().scale;
    report.scale_trace.push_back(scale ? std::optional<double>(static_cast<double>(*scale)) : std::nullopt);
  }
  report.rounds = static_cast<long>(losses.cols());
  report.assumption_violated = !tracker.bound_assumption_holds();
  return report;
}

}  // namespace nhedge
