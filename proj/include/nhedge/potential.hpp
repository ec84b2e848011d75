#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nhedge {

template <typename Scalar>
constexpr Scalar positive_part(Scalar x) {
  return std::max(x, Scalar(0));
}

/// Half-normal shaped potential exp(([x]_+)^2 / (2c)). Equals 1 on x <= 0.
template <typename Scalar>
Scalar potential(Scalar x, Scalar c) {
  if (!(c > Scalar(0))) throw std::domain_error("potential: scale must be positive");
  const Scalar xp = positive_part(x);
  return std::exp(xp * xp / (Scalar(2) * c));
}

/// d/dx of potential(x, c): ([x]_+ / c) * exp(([x]_+)^2 / (2c)).
template <typename Scalar>
Scalar potential_derivative(Scalar x, Scalar c) {
  if (!(c > Scalar(0))) throw std::domain_error("potential_derivative: scale must be positive");
  const Scalar xp = positive_part(x);
  return xp / c * std::exp(xp * xp / (Scalar(2) * c));
}

}  // namespace nhedge
