#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "summa/error.hpp"
#include "summa/format.hpp"
#include "summa/labcli.hpp"

namespace summa::lab {

namespace {

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorCode::Io, "write to " + path.string() + " failed");
}

}  // namespace

bool RunResult::passed() const noexcept {
  if (error) return false;
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

void RunResult::check(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail)});
}

int exit_code(const RunResult& result) noexcept {
  if (result.error) return 3;
  return result.passed() ? 0 : 1;
}

void write_report_csv(const MeanReport& report, std::ostream& out) {
  out << "point_id,x1,x2,n,m,p_or_phi,value\n";
  for (const auto& r : report.records) {
    out << r.point_id << ',' << format_double(r.x1) << ',' << format_double(r.x2) << ',' << r.n << ','
        << r.m << ',';
    // Phi names carry commas (exp_power:1,0.5).
    if (r.label.find(',') != std::string::npos) {
      out << '"' << r.label << '"';
    } else {
      out << r.label;
    }
    out << ',' << format_double(r.value) << '\n';
  }
}

std::string report_csv(const MeanReport& report) {
  std::ostringstream out;
  write_report_csv(report, out);
  return out.str();
}

std::string summary_json(const ExperimentConfig& config, const RunResult& result) {
  nlohmann::json j;
  j["experiment"] = config.experiment;
  if (const auto* info = find_experiment(config.experiment)) j["statement"] = info->statement;
  j["passed"] = result.passed();

  nlohmann::json cfg;
  cfg["N"] = config.grid_size;
  cfg["points"] = config.points;
  cfg["seed"] = config.seed;
  cfg["placement"] = config.placement == Placement::Lattice ? "lattice" : "random";
  cfg["corpus"] = config.corpus;
  cfg["p"] = config.p_grid;
  cfg["n"] = config.scales;
  nlohmann::json phi = nlohmann::json::array();
  for (const auto& p : config.phi) phi.push_back(p.name());
  cfg["phi"] = phi;
  cfg["lambda"] = config.lambdas;
  cfg["lambda_scale"] = config.lambda_scales;
  cfg["families"] = config.families;
  cfg["tolerance"] = config.tolerance;
  j["config"] = cfg;

  nlohmann::json assertions = nlohmann::json::array();
  for (const auto& a : result.assertions) {
    assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  }
  j["assertions"] = assertions;

  nlohmann::json constants = nlohmann::json::object();
  for (const auto& [k, v] : result.constants) constants[k] = number(v);
  j["constants"] = constants;

  j["records"] = result.report.records.size();
  if (result.error) {
    j["error"] = {{"code", result.error->code}, {"message", result.error->message}};
  } else {
    j["error"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string timing_json(const ExperimentConfig& config, const RunResult& result) {
  nlohmann::json j;
  j["experiment"] = config.experiment;
  j["seconds"] = result.seconds;
  j["threads"] = config.threads;
  return j.dump(2) + "\n";
}

void emit(const ExperimentConfig& config, const RunResult& result) {
  const std::filesystem::path dir(config.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::Io, "cannot create output directory " + dir.string());
  write_file(dir / "report.csv", report_csv(result.report));
  write_file(dir / "summary.json", summary_json(config, result));
  write_file(dir / "timing.json", timing_json(config, result));
}

}  // namespace summa::lab
