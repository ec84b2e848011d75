#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nhedge/bench/experiment.hpp"

namespace nhedge::bench {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double to_double(const std::string& s, const std::string& column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::runtime_error("csv: bad value '" + s + "' in column " + column);
}

}  // namespace

void emit_csv(const std::vector<RunRecord>& records, const std::vector<double>& quantiles, std::ostream& os) {
  if (records.empty()) throw std::invalid_argument("emit_csv: no records to write");
  os << "learner,replication,k,round,regret_best";
  for (double q : quantiles) os << ",q_" << format_real(q);
  os << ",scale,wall_ms\n";
  for (const auto& r : records) {
    if (r.regret_quantiles.size() != quantiles.size()) {
      throw std::invalid_argument("emit_csv: record quantile count does not match header");
    }
    os << to_string(r.learner) << ',' << r.replication << ',' << r.k << ',' << r.round << ','
       << format_real(r.regret_best);
    for (double v : r.regret_quantiles) os << ',' << format_real(v);
    os << ',' << (r.scale ? format_real(*r.scale) : std::string()) << ',' << r.wall_ms << '\n';
  }
}

void emit_csv(const std::vector<RunRecord>& records, const std::vector<double>& quantiles,
              const std::filesystem::path& path) {
  if (records.empty()) throw std::invalid_argument("emit_csv: no records to write");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("emit_csv: cannot open " + path.string() + " for writing");
  emit_csv(records, quantiles, os);
  os.flush();
  if (!os) throw std::runtime_error("emit_csv: write failed for " + path.string());
}

ParsedCsv read_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_csv: cannot open " + path.string());
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: empty file " + path.string());
  const auto header = split(line);
  if (header.size() < 7 || header[0] != "learner" || header[4] != "regret_best" ||
      header[header.size() - 2] != "scale" || header.back() != "wall_ms") {
    throw std::runtime_error("read_csv: unexpected header in " + path.string());
  }

  ParsedCsv out;
  for (std::size_t c = 5; c + 2 < header.size(); ++c) {
    if (header[c].rfind("q_", 0) != 0) throw std::runtime_error("read_csv: unexpected column " + header[c]);
    out.quantiles.push_back(to_double(header[c].substr(2), header[c]));
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != header.size()) throw std::runtime_error("read_csv: ragged row: " + line);
    RunRecord r;
    const auto kind = parse_learner(f[0]);
    if (!kind) throw std::runtime_error("read_csv: unknown learner " + f[0]);
    r.learner = *kind;
    r.replication = std::stol(f[1]);
    r.k = std::stol(f[2]);
    r.round = std::stol(f[3]);
    r.regret_best = to_double(f[4], header[4]);
    for (std::size_t c = 5; c + 2 < f.size(); ++c) r.regret_quantiles.push_back(to_double(f[c], header[c]));
    const auto& scale = f[f.size() - 2];
    if (!scale.empty()) r.scale = to_double(scale, "scale");
    r.wall_ms = std::stol(f.back());
    out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace nhedge::bench
