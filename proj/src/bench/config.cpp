#include <charconv>
#include <fstream>
#include <string_view>

#include "nhedge/bench/experiment.hpp"

namespace nhedge::bench {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

long parse_integer(std::string_view key, std::string_view value) {
  long out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(value) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string text(value);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw ConfigError(std::string(key) + ": expected a real number, got '" + text + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw ConfigError(std::string(key) + ": expected a boolean, got '" + std::string(value) + "'");
}

}  // namespace

ExperimentSpec parse_config(std::istream& is) {
  ExperimentSpec spec;
  bool saw_k = false, saw_learner = false, saw_replication = false, saw_n = false, saw_d = false;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    }
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));

    if (key == "effective_actions") {
      spec.effective_actions = parse_integer(key, value);
      saw_n = true;
    } else if (key == "d") {
      const long d = parse_integer(key, value);
      if (d < 1 || d > 30) throw ConfigError("d: must lie in [1, 30]");
      spec.effective_actions = (2L << d) - 2;
      saw_d = true;
    } else if (key == "good_actions" || key == "k") {
      if (!saw_k) spec.good_actions.clear();
      saw_k = true;
      spec.good_actions.push_back(parse_integer(key, value));
    } else if (key == "advantage") {
      spec.advantage = parse_double(key, value);
    } else if (key == "horizon" || key == "T") {
      spec.horizon = parse_integer(key, value);
    } else if (key == "learner") {
      if (!saw_learner) spec.learners.clear();
      saw_learner = true;
      const auto kind = parse_learner(value);
      if (!kind) throw ConfigError("learner: unknown learner '" + std::string(value) + "'");
      spec.learners.push_back(*kind);
    } else if (key == "quantile") {
      spec.quantiles.push_back(parse_double(key, value));
    } else if (key == "replication") {
      if (!saw_replication) spec.replication_factors.clear();
      saw_replication = true;
      spec.replication_factors.push_back(parse_integer(key, value));
    } else if (key == "checkpoint") {
      spec.checkpoints.push_back(parse_integer(key, value));
    } else if (key == "output") {
      spec.output_path = std::string(value);
    } else if (key == "timing") {
      spec.record_timing = parse_bool(key, value);
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (saw_n && saw_d) throw ConfigError("effective_actions and d are mutually exclusive");
  spec.validate();
  return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("config: cannot open " + path.string());
  return parse_config(is);
}

}  // namespace nhedge::bench
