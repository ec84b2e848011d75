#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nhedge/adversary.hpp"
#include "nhedge/learner.hpp"

namespace nhedge::bench {

/// One sweep over (learner, good-action count, replication factor) cells on the
/// replicated Hadamard construction.
struct ExperimentSpec {
  long effective_actions = 126;
  std::vector<long> good_actions{1};
  double advantage = 0.025;
  long horizon = 32768;
  std::vector<LearnerKind> learners{LearnerKind::NormalHedge, LearnerKind::ExpTimeAdaptive,
                                    LearnerKind::PolyWeights};
  std::vector<double> quantiles;
  std::vector<long> replication_factors{1};
  std::filesystem::path output_path;
  std::vector<long> checkpoints;  // empty: powers of two up to T, plus T
  bool record_timing = false;     // wall_ms is written as 0 unless set

  void validate() const;
  /// Sorted, de-duplicated checkpoint rounds actually recorded.
  std::vector<long> resolved_checkpoints() const;
  AdversaryConfig adversary(long k, long replication) const;
};

struct RunRecord {
  LearnerKind learner = LearnerKind::NormalHedge;
  long replication = 1;
  long k = 1;
  long round = 0;
  double regret_best = 0.0;
  std::vector<double> regret_quantiles;
  std::optional<double> scale;
  long wall_ms = 0;
};

/// Streams one cell's loss columns through a learner and records the
/// checkpoint rows. Holds a single loss column and one learner state.
std::vector<RunRecord> run_cell(const ExperimentSpec& spec, LearnerKind learner, long k, long replication);

/// All cells of the spec, ordered by (learner name, replication, k, round).
/// Cells run concurrently; output does not depend on scheduling.
std::vector<RunRecord> run_experiment(const ExperimentSpec& spec);

/// CSV with header
/// "learner,replication,k,round,regret_best,q_<quantile>...,scale,wall_ms".
void emit_csv(const std::vector<RunRecord>& records, const std::vector<double>& quantiles,
              const std::filesystem::path& path);
void emit_csv(const std::vector<RunRecord>& records, const std::vector<double>& quantiles, std::ostream& os);

struct ParsedCsv {
  std::vector<double> quantiles;
  std::vector<RunRecord> records;
};
ParsedCsv read_csv(const std::filesystem::path& path);

/// Flat key=value config; list-valued keys repeat. Lines starting with '#' are comments.
ExperimentSpec parse_config(std::istream& is);
ExperimentSpec load_config(const std::filesystem::path& path);

/// Formats a value with 9 significant digits.
std::string format_real(double v);

/// Entry point for the command line tool; returns the process exit code
/// (0 success, 1 runtime error, 2 configuration or usage error).
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nhedge::bench
