#include "nhedge/bench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <future>
#include <thread>
#include <tuple>

namespace nhedge::bench {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void ExperimentSpec::validate() const {
  if (good_actions.empty()) throw ConfigError("good_actions: at least one value required");
  if (learners.empty()) throw ConfigError("learner: at least one learner required");
  if (replication_factors.empty()) throw ConfigError("replication: at least one factor required");
  for (long m : replication_factors) {
    if (m < 1) throw ConfigError("replication: factors must be >= 1, got " + std::to_string(m));
  }
  for (double q : quantiles) {
    if (!(q > 0.0 && q <= 1.0)) throw ConfigError("quantile: values must lie in (0, 1], got " + format_real(q));
  }
  for (long c : checkpoints) {
    if (c < 1 || c > horizon) {
      throw ConfigError("checkpoint: rounds must lie in [1, horizon], got " + std::to_string(c));
    }
  }
  for (long k : good_actions) adversary(k, 1).validate();
}

std::vector<long> ExperimentSpec::resolved_checkpoints() const {
  std::vector<long> out = checkpoints;
  if (out.empty()) {
    for (long r = 1; r <= horizon; r *= 2) out.push_back(r);
    out.push_back(horizon);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AdversaryConfig ExperimentSpec::adversary(long k, long replication) const {
  AdversaryConfig cfg;
  cfg.effective_actions = effective_actions;
  cfg.total_actions = effective_actions * replication;
  cfg.good_actions = k;
  cfg.advantage = advantage;
  cfg.horizon = horizon;
  return cfg;
}

std::vector<RunRecord> run_cell(const ExperimentSpec& spec, LearnerKind kind, long k, long replication) {
  using clock = std::chrono::steady_clock;
  const AdversaryConfig cfg = spec.adversary(k, replication);
  LossColumns<double> columns(cfg);
  Learner<double> learner(kind, columns.rows());
  RegretTracker<double> tracker(columns.rows());
  const auto checkpoints = spec.resolved_checkpoints();

  std::vector<RunRecord> records;
  records.reserve(checkpoints.size());
  Vector<double> losses;
  auto next = checkpoints.begin();
  const auto start = clock::now();
  for (long t = 0; t < cfg.horizon && next != checkpoints.end(); ++t) {
    columns.column(t, losses);
    const auto outcome = learner.step(losses);
    tracker.record(outcome.learner_loss, losses);
    if (t + 1 != *next) continue;
    ++next;

    RunRecord rec;
    rec.learner = kind;
    rec.replication = replication;
    rec.k = k;
    rec.round = t + 1;
    rec.regret_best = tracker.regret_best();
    for (double q : spec.quantiles) rec.regret_quantiles.push_back(tracker.regret_quantile(q));
    rec.scale = learner.state().scale;
    if (spec.record_timing) {
      rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  struct Cell {
    LearnerKind learner;
    long k;
    long replication;
  };
  std::vector<Cell> cells;
  for (auto learner : spec.learners) {
    for (long k : spec.good_actions) {
      for (long m : spec.replication_factors) cells.push_back({learner, k, m});
    }
  }

  // Each worker pulls cells by index and writes only its own result slot.
  std::vector<std::vector<RunRecord>> results(cells.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < cells.size(); i = cursor++) {
      results[i] = run_cell(spec, cells[i].learner, cells[i].k, cells[i].replication);
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::future<void>> pending;
  for (std::size_t w = 1; w < workers; ++w) pending.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& f : pending) f.get();

  std::vector<RunRecord> records;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(records));
  std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tuple(to_string(a.learner), a.replication, a.k, a.round) <
           std::tuple(to_string(b.learner), b.replication, b.k, b.round);
  });
  return records;
}

}  // namespace nhedge::bench
