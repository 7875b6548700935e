#pragma once

#include <string>
#include <utility>
#include <vector>

#include "summa/corpus.hpp"
#include "summa/labcli.hpp"

namespace summa::lab {

// A one-dimensional function fed to the 1D suites: either a 1D corpus entry or
// one x1-section of a 2D entry.
struct Workload1D {
  std::string name;
  bool section = false;
  double x2 = 0;  // section coordinate, 0 for 1D entries
  CorpusInfo info;
  SampledFunction1D f;
};

// 2D entries contribute the sections at x2 = -pi + 2 pi (k/4 + 1/16), k = 0..3,
// which are grid points of every N >= 16.
std::vector<Workload1D> workloads_1d(const std::vector<std::string>& names, std::size_t n);

std::vector<std::string> corpus_or(const ExperimentConfig& c, std::vector<std::string> defaults);
ExponentGrid p_grid_or(const ExperimentConfig& c, const ExponentGrid& defaults);
std::vector<int> scales_or(const ExperimentConfig& c, std::vector<int> defaults);
std::vector<double> lambdas_or(const ExperimentConfig& c, std::vector<double> defaults);
std::vector<PhiSpec> phi_or(const ExperimentConfig& c, std::vector<PhiSpec> defaults);

// Sample indices on `grid` by the configured placement.
std::vector<std::size_t> points_1d(const ExperimentConfig& c, const PeriodicGrid& grid,
                                   const CorpusInfo& info);
std::vector<std::pair<std::size_t, std::size_t>> points_2d(const ExperimentConfig& c,
                                                           const PeriodicGrid& grid,
                                                           const CorpusInfo& info);

double median(std::vector<double> v);
double relative_change(double a, double b);

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double slope_stderr = 0;
};
// Ordinary least squares y = intercept + slope x; needs at least two points.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

std::string fmt(double v);

// Experiment bodies; each appends records, assertions and constants.
void verify_gabisonia(const ExperimentConfig& c, RunResult& r);
void verify_schipp(const ExperimentConfig& c, RunResult& r);
void verify_rodin_llogl(const ExperimentConfig& c, RunResult& r);
void verify_weak_half(const ExperimentConfig& c, RunResult& r);
void verify_oskolkov(const ExperimentConfig& c, RunResult& r);
void verify_czd(const ExperimentConfig& c, RunResult& r);
void verify_main_2d(const ExperimentConfig& c, RunResult& r);
void verify_uv(const ExperimentConfig& c, RunResult& r);
void verify_trigpoly_decay(const ExperimentConfig& c, RunResult& r);
void converge_theorem(const ExperimentConfig& c, RunResult& r);
void converge_jmz(const ExperimentConfig& c, RunResult& r);
void converge_rodin_1d(const ExperimentConfig& c, RunResult& r);

}  // namespace summa::lab
