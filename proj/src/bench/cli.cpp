#include <CLI11.hpp>

#include <iostream>

#include "nhedge/analytics.hpp"
#include "nhedge/bench/experiment.hpp"

namespace nhedge::bench {

int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online learning benchmark: NormalHedge vs. N-tuned baselines on replicated Hadamard losses",
               "nhedge"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run an experiment described by a key=value config file");
  std::string config_path, run_out;
  run->add_option("--config", config_path, "Experiment config file")->required();
  run->add_option("--out", run_out, "Override the config's output path");

  auto* gen = app.add_subcommand("gen", "Export a replicated loss matrix as CSV");
  int d = 0;
  long horizon = 0, k = 0, m = 1;
  double adv = 0.0;
  std::string gen_out;
  gen->add_option("--d", d, "Hadamard order exponent (n = 2^(d+1) - 2)")->required();
  gen->add_option("--T", horizon, "Number of rounds")->required();
  gen->add_option("--k", k, "Number of good actions")->required();
  gen->add_option("--adv", adv, "Advantage subtracted from good actions")->required();
  gen->add_option("--m", m, "Replication factor")->required();
  gen->add_option("--out", gen_out, "Output CSV path")->required();

  auto* bound = app.add_subcommand("bound", "Print the quantile regret bound after t rounds");
  BoundParams params;
  bound->add_option("--t", params.t, "Round")->required();
  bound->add_option("--N", params.num_actions, "Number of actions")->required();
  bound->add_option("--eps", params.quantile, "Quantile in (0, 1]")->required();
  bound->add_option("--delta", params.delta, "Phase parameter in (0, 1/2]")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*run) {
      ExperimentSpec spec = load_config(config_path);
      if (!run_out.empty()) spec.output_path = run_out;
      const auto records = run_experiment(spec);
      if (spec.output_path.empty()) {
        emit_csv(records, spec.quantiles, out);
      } else {
        emit_csv(records, spec.quantiles, spec.output_path);
      }
    } else if (*gen) {
      if (d < 1) throw ConfigError("--d: must be >= 1");
      const auto losses = replicate(apply_advantage(build_base<double>(d, horizon), k, adv), m);
      write_loss_csv(losses, gen_out);
    } else if (*bound) {
      out << format_real(theorem1_bound(params)) << '\n';
    }
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace nhedge::bench
