#pragma once

#include <Eigen/Core>

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "nhedge/errors.hpp"
#include "nhedge/learner_state.hpp"

namespace nhedge {

/// Parameters of the replicated Hadamard loss construction.
///
/// n = 2^(d+1) - 2 distinct actions, of which the first k receive an
/// `advantage` subtracted from every loss; each distinct row is repeated
/// N / n times; the horizon must be a whole number of 2^d-column periods.
struct AdversaryConfig {
  long effective_actions = 6;  // n
  long total_actions = 6;      // N
  long good_actions = 1;       // k
  double advantage = 0.025;
  long horizon = 8;  // T

  /// d such that n = 2^(d+1) - 2.
  int dimension() const { return std::countr_zero(static_cast<unsigned long>(effective_actions + 2)) - 1; }
  long period() const { return 1L << dimension(); }
  long replication() const { return total_actions / effective_actions; }

  void validate() const {
    const long n = effective_actions;
    if (n < 2 || !std::has_single_bit(static_cast<unsigned long>(n + 2))) {
      throw ConfigError("effective_actions: n + 2 must be a power of two with n >= 2, got " + std::to_string(n));
    }
    if (total_actions < n || total_actions % n != 0) {
      throw ConfigError("total_actions: must be a positive multiple of effective_actions, got " +
                        std::to_string(total_actions));
    }
    if (good_actions < 1 || good_actions > n) {
      throw ConfigError("good_actions: must lie in [1, " + std::to_string(n) + "], got " + std::to_string(good_actions));
    }
    if (!(advantage > 0.0) || !std::isfinite(advantage)) throw ConfigError("advantage: must be positive and finite");
    if (horizon < 1 || horizon % period() != 0) {
      throw ConfigError("horizon: must be a positive multiple of " + std::to_string(period()) + ", got " +
                        std::to_string(horizon));
    }
  }
};

/// Sylvester Hadamard matrix of order 2^d.
template <typename Scalar = double>
Matrix<Scalar> hadamard(int d) {
  if (d < 0) throw ConfigError("hadamard: order exponent must be nonnegative");
  Matrix<Scalar> h = Matrix<Scalar>::Ones(1, 1);
  for (int level = 0; level < d; ++level) {
    const Eigen::Index m = h.rows();
    Matrix<Scalar> next(2 * m, 2 * m);
    next << h, h, h, -h;
    h = std::move(next);
  }
  return h;
}

namespace detail {

// Entry (i, j) of the Sylvester matrix without materializing it.
inline int sylvester_sign(unsigned long i, unsigned long j) { return (std::popcount(i & j) & 1) ? -1 : 1; }

}  // namespace detail

/// The n x T base loss matrix: drop the constant Hadamard row, stack the
/// negated rows above the originals, tile horizontally, halve column 0.
template <typename Scalar = double>
Matrix<Scalar> build_base(int d, long horizon) {
  if (d < 1) throw ConfigError("build_base: need d >= 1");
  const long period = 1L << d;
  if (horizon < 1 || horizon % period != 0) {
    throw ConfigError("build_base: horizon " + std::to_string(horizon) + " is not a multiple of " +
                      std::to_string(period));
  }
  const Matrix<Scalar> h = hadamard<Scalar>(d);
  const Eigen::Index half = period - 1;
  Matrix<Scalar> block(2 * half, period);
  block << -h.bottomRows(half), h.bottomRows(half);

  Matrix<Scalar> base = block.replicate(1, horizon / period);
  base.col(0) /= Scalar(2);
  return base;
}

/// Subtracts `advantage` from every entry of the first k rows.
template <typename Derived>
Matrix<typename Derived::Scalar> apply_advantage(const Eigen::MatrixBase<Derived>& base, long k,
                                                 typename Derived::Scalar advantage) {
  if (k < 1 || k > base.rows()) throw ConfigError("apply_advantage: k out of range");
  if (advantage < 0) throw ConfigError("apply_advantage: advantage must be nonnegative");
  Matrix<typename Derived::Scalar> out = base;
  out.topRows(k).array() -= advantage;
  return out;
}

/// Stacks m copies of `base` vertically.
template <typename Derived>
Matrix<typename Derived::Scalar> replicate(const Eigen::MatrixBase<Derived>& base, long m) {
  if (m < 1) throw ConfigError("replicate: factor must be >= 1");
  return base.replicate(m, 1);
}

/// Full N x T loss matrix for a configuration.
template <typename Scalar = double>
Matrix<Scalar> build_losses(const AdversaryConfig& cfg) {
  cfg.validate();
  return replicate(apply_advantage(build_base<Scalar>(cfg.dimension(), cfg.horizon), cfg.good_actions,
                                   static_cast<Scalar>(cfg.advantage)),
                   cfg.replication());
}

/// Generates loss columns of the replicated construction one round at a time,
/// in O(N) per column, without materializing the N x T matrix.
template <typename Scalar = double>
class LossColumns {
 public:
  explicit LossColumns(const AdversaryConfig& cfg) : cfg_(cfg), base_(cfg.effective_actions) { cfg.validate(); }

  const AdversaryConfig& config() const { return cfg_; }
  long rounds() const { return cfg_.horizon; }
  Eigen::Index rows() const { return cfg_.total_actions; }

  /// Column t (0-based round index) written into `out`, resized to N.
  void column(long t, Vector<Scalar>& out) {
    if (t < 0 || t >= cfg_.horizon) throw std::out_of_range("LossColumns: round index out of range");
    const unsigned long half = static_cast<unsigned long>(cfg_.period() - 1);
    const unsigned long j = static_cast<unsigned long>(t % cfg_.period());
    const Scalar magnitude = t == 0 ? Scalar(0.5) : Scalar(1);
    const Scalar adv = static_cast<Scalar>(cfg_.advantage);
    for (long r = 0; r < cfg_.effective_actions; ++r) {
      const unsigned long ur = static_cast<unsigned long>(r);
      const int sign = ur < half ? -1 : 1;
      Scalar v = magnitude * Scalar(sign * detail::sylvester_sign(ur % half + 1, j));
      if (r < cfg_.good_actions) v -= adv;
      base_[r] = v;
    }
    out = base_.replicate(cfg_.replication(), 1);
  }

 private:
  AdversaryConfig cfg_;
  Vector<Scalar> base_;
};

/// Writes a loss matrix as CSV: header "action,t1,...,tT", one row per action
/// (1-based index first), values with 9 significant digits.
template <typename Derived>
void write_loss_csv(const Eigen::MatrixBase<Derived>& losses, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << "action";
  for (Eigen::Index t = 0; t < losses.cols(); ++t) os << ",t" << (t + 1);
  os << '\n';
  char buf[64];
  for (Eigen::Index i = 0; i < losses.rows(); ++i) {
    os << (i + 1);
    for (Eigen::Index t = 0; t < losses.cols(); ++t) {
      std::snprintf(buf, sizeof buf, ",%.9g", static_cast<double>(losses(i, t)));
      os << buf;
    }
    os << '\n';
  }
  if (!os) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace nhedge
