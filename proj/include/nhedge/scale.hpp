#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "nhedge/errors.hpp"

namespace nhedge {

/// Average potential (1/N) sum_i exp(([R_i]_+)^2 / (2c)) over all actions.
template <typename Derived>
typename Derived::Scalar scale_equation_lhs(const Eigen::MatrixBase<Derived>& regrets,
                                            typename Derived::Scalar c) {
  using Scalar = typename Derived::Scalar;
  if (!(c > Scalar(0))) throw std::domain_error("scale_equation_lhs: scale must be positive");
  const auto positive = regrets.array().max(Scalar(0));
  return (positive.square() / (Scalar(2) * c)).exp().mean();
}

/// Finds the unique c > 0 with scale_equation_lhs(regrets, c) == e.
///
/// Returns std::nullopt when no regret is positive: the average potential is then
/// identically 1 and the equation has no solution.
///
/// The search runs on u = 1/c, where g(u) = log((1/N) sum_i exp(a_i u)) - 1 with
/// a_i = ([R_i]_+)^2 / 2 is convex and strictly increasing. The root lies in
/// [1/a_max, ln(N e)/a_max]; Newton steps taken from the upper end decrease
/// monotonically onto the root, and any step that leaves the current bracket is
/// replaced by bisection. Iteration stops once the bracket or step reaches
/// machine precision, which leaves the LHS residual far below 1e-10 relative.
template <typename Derived>
std::optional<typename Derived::Scalar> solve_scale(const Eigen::MatrixBase<Derived>& regrets) {
  using Scalar = typename Derived::Scalar;
  using std::log;
  const Eigen::Index n = regrets.size();
  if (n < 2) throw ConfigError("solve_scale: need at least two actions");

  const auto half_sq = (regrets.array().max(Scalar(0)).square() / Scalar(2)).eval();
  const Scalar a_max = half_sq.maxCoeff();
  if (!(a_max > Scalar(0))) return std::nullopt;

  const Scalar log_n = log(static_cast<Scalar>(n));
  // g(u) and g'(u) via a max-shifted log-sum-exp.
  auto eval = [&](Scalar u, Scalar& slope) {
    const Scalar shift = a_max * u;
    const auto w = (half_sq * u - shift).exp().eval();
    const Scalar total = w.sum();
    slope = (half_sq * w).sum() / total;
    return log(total) + shift - log_n - Scalar(1);
  };

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar lo = Scalar(1) / a_max;
  Scalar hi = (log_n + Scalar(1)) / a_max;
  Scalar u = hi;
  for (int iter = 0; iter < 200; ++iter) {
    Scalar slope;
    const Scalar g = eval(u, slope);
    if (g == Scalar(0)) break;
    if (g > Scalar(0)) {
      hi = u;
    } else {
      lo = u;
    }
    if (hi - lo <= Scalar(4) * eps * hi) break;
    Scalar next = u - g / slope;
    if (!(next > lo && next < hi)) next = lo + (hi - lo) / Scalar(2);
    if (std::abs(next - u) <= Scalar(2) * eps * u) {
      u = next;
      break;
    }
    u = next;
  }
  return Scalar(1) / u;
}

}  // namespace nhedge
