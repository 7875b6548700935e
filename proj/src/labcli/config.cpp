#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "summa/corpus.hpp"
#include "summa/error.hpp"
#include "summa/labcli.hpp"

namespace summa::lab {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("bad value for '" + std::string(key) + "': " + std::string(value));
  }
  return out;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  static const std::set<std::string, std::less<>> list_keys = {"corpus", "p", "n", "phi", "lambda",
                                                               "lambda_scale"};
  static const std::set<std::string, std::less<>> scalar_keys = {
      "experiment", "N", "points", "seed", "placement", "families", "tolerance", "threads", "out"};
  ExperimentConfig c;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(where + "empty key or value");
    if (scalar_keys.count(key)) {
      if (!seen.insert(std::string(key)).second) throw ConfigError(where + "'" + std::string(key) + "' given twice");
    } else if (!list_keys.count(key)) {
      throw ConfigError(where + "unknown key '" + std::string(key) + "'");
    }

    if (key == "experiment") {
      c.experiment = value;
    } else if (key == "corpus") {
      c.corpus.emplace_back(value);
    } else if (key == "N") {
      c.grid_size = parse_number<std::size_t>(key, value);
    } else if (key == "points") {
      c.points = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "placement") {
      if (value == "random") {
        c.placement = Placement::Random;
      } else if (value == "lattice") {
        c.placement = Placement::Lattice;
      } else {
        throw ConfigError(where + "placement must be random or lattice");
      }
    } else if (key == "p") {
      c.p_grid.push_back(parse_number<double>(key, value));
    } else if (key == "n") {
      c.scales.push_back(parse_number<int>(key, value));
    } else if (key == "phi") {
      try {
        for (auto& phi : parse_phi_list(value)) c.phi.push_back(phi);
      } catch (const Error& e) {
        throw ConfigError(where + e.what());
      }
    } else if (key == "lambda") {
      c.lambdas.push_back(parse_number<double>(key, value));
    } else if (key == "lambda_scale") {
      c.lambda_scales.push_back(parse_number<double>(key, value));
    } else if (key == "families") {
      c.families = parse_number<std::size_t>(key, value);
    } else if (key == "tolerance") {
      c.tolerance = parse_number<double>(key, value);
    } else if (key == "threads") {
      c.threads = parse_number<std::size_t>(key, value);
    } else if (key == "out") {
      c.out_dir = value;
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ExperimentConfig resolve(ExperimentConfig c) {
  const auto* info = find_experiment(c.experiment);
  if (!info) throw ConfigError("unknown experiment '" + c.experiment + "'");
  if (c.grid_size == 0) c.grid_size = info->default_grid_size;
  if (!is_power_of_two(c.grid_size) || c.grid_size < 16) {
    throw ConfigError("N must be a power of two >= 16");
  }
  if (c.points == 0) throw ConfigError("points must be positive");
  if (c.threads == 0) throw ConfigError("threads must be positive");
  if (c.families == 0) throw ConfigError("families must be positive");
  if (!(c.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  for (const auto& name : c.corpus) {
    try {
      (void)corpus_info(name);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  if (!c.p_grid.empty()) {
    try {
      (void)ExponentGrid(c.p_grid);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  for (int n : c.scales) {
    if (n < 1 || static_cast<std::size_t>(n) > c.grid_size / 2) {
      throw ConfigError("n = " + std::to_string(n) + " outside [1, N/2]");
    }
  }
  for (double l : c.lambdas)
    if (!(l > 0.0)) throw ConfigError("lambda must be positive");
  for (double s : c.lambda_scales)
    if (!(s >= 1.0)) throw ConfigError("lambda_scale must be >= 1");
  return c;
}

}  // namespace summa::lab
