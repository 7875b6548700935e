#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "summa/means.hpp"
#include "summa/phi.hpp"

namespace summa::lab {

struct ExperimentInfo {
  std::string id;
  std::string statement;  ///< the inequality or theorem the experiment exercises
  int dims = 1;
  std::size_t default_grid_size = 256;
};

/// Every experiment id, in listing order.
const std::vector<ExperimentInfo>& experiments();
/// nullptr when the id is unknown.
const ExperimentInfo* find_experiment(std::string_view id);

/// Malformed config text, unknown keys or values; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Placement { Random, Lattice };

struct ExperimentConfig {
  std::string experiment;
  std::vector<std::string> corpus;  ///< empty: the experiment's default entries
  std::size_t grid_size = 0;        ///< 0: the experiment's default
  std::size_t points = 64;
  std::uint64_t seed = 1;
  Placement placement = Placement::Random;
  std::vector<double> p_grid;        ///< empty: the experiment's default
  std::vector<int> scales;           ///< dyadic n (and m) targets
  std::vector<PhiSpec> phi;
  std::vector<double> lambdas;       ///< absolute levels
  std::vector<double> lambda_scales; ///< czd: sqrt(lambda) = scale * mean|f|
  std::size_t families = 20;
  double tolerance = 0.10;           ///< relative refinement tolerance
  std::size_t threads = 1;           ///< not part of the report
  std::string out_dir = ".";         ///< not part of the report
};

/// Flat "key = value" text; '#' starts a comment; repeated keys form lists.
/// Keys: experiment, corpus, N, points, seed, placement (random|lattice), p, n,
/// phi, lambda, lambda_scale, families, tolerance, threads, out.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Fills defaults and checks ids, corpus names and N. Throws ConfigError.
ExperimentConfig resolve(ExperimentConfig config);

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ErrorRecord {
  std::string code;
  std::string message;
};

struct RunResult {
  MeanReport report;
  std::vector<Assertion> assertions;
  std::map<std::string, double> constants;
  std::optional<ErrorRecord> error;
  double seconds = 0;

  bool passed() const noexcept;
  void check(std::string name, bool ok, std::string detail = {});
};

/// Runs a resolved config. Library errors are caught into RunResult::error.
RunResult run(const ExperimentConfig& config);

/// 0 pass, 1 assertion failure, 3 error record.
int exit_code(const RunResult& result) noexcept;

/// Header "point_id,x1,x2,n,m,p_or_phi,value", LF line endings.
void write_report_csv(const MeanReport& report, std::ostream& out);
std::string report_csv(const MeanReport& report);
/// Sorted keys; contains no wall-clock data.
std::string summary_json(const ExperimentConfig& config, const RunResult& result);
std::string timing_json(const ExperimentConfig& config, const RunResult& result);

/// Writes report.csv, summary.json and timing.json into config.out_dir.
/// Throws Error(Io) when a file cannot be written.
void emit(const ExperimentConfig& config, const RunResult& result);

}  // namespace summa::lab
