#include <doctest.h>

#include <Eigen/Core>

#include <filesystem>
#include <fstream>
#include <string>

#include "nhedge/adversary.hpp"

using namespace nhedge;

namespace {

// First 12 columns of the displayed A_6.
Eigen::MatrixXd displayed_a6() {
  Eigen::MatrixXd m(6, 12);
  m << -0.5, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1,  //
      -0.5, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1,   //
      -0.5, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1,   //
      +0.5, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1,   //
      +0.5, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1,   //
      +0.5, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1;
  return m;
}

}  // namespace

TEST_CASE("small Hadamard matrices") {
  CHECK(hadamard(0) == Eigen::MatrixXd::Ones(1, 1));
  Eigen::MatrixXd h1(2, 2);
  h1 << 1, 1, 1, -1;
  CHECK(hadamard(1) == h1);
  const auto h2 = hadamard(2);
  CHECK(h2.row(1) == Eigen::RowVector4d(1, -1, 1, -1));
  CHECK(h2.row(2) == Eigen::RowVector4d(1, 1, -1, -1));
  CHECK(h2.row(3) == Eigen::RowVector4d(1, -1, -1, 1));
  CHECK_THROWS_AS(hadamard(-1), ConfigError);
}

TEST_CASE("Hadamard rows are orthogonal with constant first row and column") {
  for (int d = 0; d <= 10; ++d) {
    const Eigen::MatrixXd h = hadamard(d);
    const double order = std::ldexp(1.0, d);
    CHECK((h * h.transpose()).isApprox(order * Eigen::MatrixXd::Identity(h.rows(), h.rows())));
    CHECK((h.row(0).array() == 1).all());
    CHECK((h.col(0).array() == 1).all());
  }
}

TEST_CASE("base matrix reproduces the displayed A_6 exactly") {
  const Eigen::MatrixXd expected = displayed_a6();
  CHECK(build_base(2, 8) == expected.leftCols(8));
  CHECK(build_base(2, 12) == expected);
  CHECK(build_base(2, 8).row(0) == Eigen::RowVectorXd{{-0.5, 1, -1, 1, -1, 1, -1, 1}});
  CHECK(build_base(2, 8).row(3) == Eigen::RowVectorXd{{0.5, -1, 1, -1, 1, -1, 1, -1}});
}

TEST_CASE("smallest base matrix") {
  Eigen::MatrixXd expected(2, 2);
  expected << -0.5, 1, 0.5, -1;
  CHECK(build_base(1, 2) == expected);
}

TEST_CASE("advantage reproduces the displayed A_6^{eps,2}") {
  const double eps = 0.1;
  Eigen::MatrixXd expected = displayed_a6().leftCols(8);
  expected.topRows(2).array() -= eps;
  CHECK(apply_advantage(build_base(2, 8), 2, eps) == expected);
  CHECK(apply_advantage(build_base(2, 8), 2, 0.0) == build_base(2, 8));

  const Eigen::MatrixXd all = apply_advantage(build_base(2, 8), 6, eps);
  CHECK((all - build_base(2, 8)).isApprox(Eigen::MatrixXd::Constant(6, 8, -eps)));
  CHECK_THROWS_AS(apply_advantage(build_base(2, 8), 0, eps), ConfigError);
  CHECK_THROWS_AS(apply_advantage(build_base(2, 8), 7, eps), ConfigError);
}

TEST_CASE("base matrix structure") {
  for (int d = 1; d <= 7; ++d) {
    const long period = 1L << d;
    const Eigen::MatrixXd a = build_base(d, 4 * period);
    CHECK(a.rows() == 2 * period - 2);
    const Eigen::Index half = period - 1;
    // each row plus its negation pair vanishes entrywise
    CHECK((a.topRows(half) + a.bottomRows(half)).isZero(0.0));
    CHECK(((a.array().abs() == 1) || (a.array().abs() == 0.5)).all());
    // full periods after the first sum to zero
    CHECK(a.middleCols(period, period).rowwise().sum().isZero(0.0));
  }
  CHECK_THROWS_AS(build_base(2, 6), ConfigError);
  CHECK_THROWS_AS(build_base(0, 4), ConfigError);
}

TEST_CASE("replication") {
  const Eigen::MatrixXd base = apply_advantage(build_base(2, 8), 2, 0.025);
  CHECK(replicate(base, 1) == base);
  const Eigen::MatrixXd two = replicate(base, 2);
  CHECK(two.rows() == 12);
  CHECK(two.bottomRows(6) == two.topRows(6));
  CHECK_THROWS_AS(replicate(base, 0), ConfigError);
}

TEST_CASE("config validation") {
  AdversaryConfig cfg{126, 126 * 64, 2, 0.025, 32768};
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.dimension() == 6);
  CHECK(cfg.period() == 64);
  CHECK(cfg.replication() == 64);
  CHECK(cfg.total_actions == 8064);

  CHECK_THROWS_AS((AdversaryConfig{100, 100, 1, 0.1, 64}.validate()), ConfigError);
  CHECK_THROWS_AS((AdversaryConfig{6, 9, 1, 0.1, 8}.validate()), ConfigError);
  CHECK_THROWS_AS((AdversaryConfig{6, 6, 7, 0.1, 8}.validate()), ConfigError);
  CHECK_THROWS_AS((AdversaryConfig{6, 6, 1, 0.0, 8}.validate()), ConfigError);
  CHECK_THROWS_AS((AdversaryConfig{6, 6, 1, 0.1, 10}.validate()), ConfigError);
}

TEST_CASE("streamed columns equal the materialized matrix bitwise") {
  for (const AdversaryConfig cfg : {AdversaryConfig{6, 12, 2, 0.025, 32}, AdversaryConfig{30, 90, 5, 0.1, 64},
                                     AdversaryConfig{2, 2, 1, 0.3, 4}}) {
    const Eigen::MatrixXd full = build_losses(cfg);
    CHECK(full.rows() == cfg.total_actions);
    CHECK(full.cols() == cfg.horizon);
    CHECK((full.array() >= -1 - cfg.advantage).all());
    CHECK((full.array() <= 1).all());
    LossColumns<double> columns(cfg);
    Eigen::VectorXd col;
    for (long t = 0; t < cfg.horizon; ++t) {
      columns.column(t, col);
      CHECK(col == full.col(t));
    }
    CHECK_THROWS_AS(columns.column(cfg.horizon, col), std::out_of_range);
  }
}

TEST_CASE("loss matrix CSV export") {
  const auto path = std::filesystem::temp_directory_path() / "nhedge_test_losses.csv";
  write_loss_csv(apply_advantage(build_base(2, 8), 2, 0.1), path);
  std::ifstream is(path);
  std::string line;
  std::getline(is, line);
  CHECK(line == "action,t1,t2,t3,t4,t5,t6,t7,t8");
  std::getline(is, line);
  CHECK(line == "1,-0.6,0.9,-1.1,0.9,-1.1,0.9,-1.1,0.9");
  int rows = 1;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 6);
  std::filesystem::remove(path);
}
