#include "common.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "summa/error.hpp"
#include "summa/format.hpp"
#include "summa/parallel.hpp"

namespace summa::lab {

namespace {

using Body = void (*)(const ExperimentConfig&, RunResult&);

struct Entry {
  ExperimentInfo info;
  Body body;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"verify-gabisonia", "power means of partial sums are dominated by the Gabisonia operator G_p^(n)", 1, 128},
       verify_gabisonia},
      {{"verify-schipp", "power means of partial sums are dominated by p times G_2", 1, 128}, verify_schipp},
      {{"verify-rodin-llogl", "||G_2 f||_1 is bounded by 1 + int |f| log+ |f| for f in L log L", 1, 128},
       verify_rodin_llogl},
      {{"verify-weak-half",
        "weak-type (||f||_1 / lambda)^(1/2) bound for sup_p of the one-sided Gabisonia operator over p ln ln(p+2)",
        1, 256},
       verify_weak_half},
      {{"verify-oskolkov",
        "exponential level-set decay of the Oskolkov sum over disjoint intervals and integrability of its rooted form",
        1, 1024},
       verify_oskolkov},
      {{"verify-czd",
        "dyadic Calderon-Zygmund decomposition: two-sided average bound, total length bound, dilated set",
        1, 256},
       verify_czd},
      {{"verify-main-2d",
        "weak-type (1/2) bound for sup_p sup_(n,m) rooted strong means over p^2 ln ln(p+2) in L log L and the Luxemburg norm",
        2, 128},
       verify_main_2d},
      {{"verify-uv", "u(s) <= v_K(s) for the exponential series comparison", 1, 256}, verify_uv},
      {{"verify-trigpoly-decay",
        "strong means of a double trigonometric polynomial decay like c1/n + c2/m", 2, 128},
       verify_trigpoly_decay},
      {{"converge-theorem", "Phi-strong rectangular means converge for f in L log L", 2, 128},
       converge_theorem},
      {{"converge-jmz", "(C,1,1) rectangular means converge for f in L log L", 2, 128}, converge_jmz},
      {{"converge-rodin-1d", "one-dimensional strong means with exponential Phi converge for f in L^1", 1, 256},
       converge_rodin_1d},
  };
  return entries;
}

}  // namespace

const std::vector<ExperimentInfo>& experiments() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const ExperimentInfo* find_experiment(std::string_view id) {
  for (const auto& info : experiments())
    if (info.id == id) return &info;
  return nullptr;
}

RunResult run(const ExperimentConfig& config) {
  RunResult result;
  result.report.grid_size = config.grid_size;
  result.report.seed = config.seed;
  for (std::size_t i = 0; i < config.corpus.size(); ++i) {
    result.report.corpus += (i ? ";" : "") + config.corpus[i];
  }
  Body body = nullptr;
  for (const auto& e : registry())
    if (e.info.id == config.experiment) body = e.body;
  if (!body) throw ConfigError("unknown experiment '" + config.experiment + "'");

  const std::size_t saved_threads = thread_count();
  set_thread_count(config.threads);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(config, result);
  } catch (const Error& e) {
    result.error = ErrorRecord{std::string(to_string(e.code())), e.what()};
  } catch (const ConfigError&) {
    set_thread_count(saved_threads);
    throw;
  } catch (const std::exception& e) {
    result.error = ErrorRecord{"internal", e.what()};
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  set_thread_count(saved_threads);
  return result;
}

std::vector<Workload1D> workloads_1d(const std::vector<std::string>& names, std::size_t n) {
  const PeriodicGrid grid(n);
  std::vector<Workload1D> out;
  for (const auto& name : names) {
    auto info = corpus_info(name);
    if (info.dims == 1) {
      out.push_back({name, false, 0.0, info, corpus_1d(name, grid)});
      continue;
    }
    const auto f = corpus_2d(name, grid, grid);
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t row = k * n / 4 + n / 16;
      CorpusInfo section_info = info;
      section_info.dims = 1;
      section_info.singular_x2.reset();
      out.push_back({name, true, grid.point(row), section_info, f.section_along_x1(row)});
    }
  }
  return out;
}

std::vector<std::string> corpus_or(const ExperimentConfig& c, std::vector<std::string> defaults) {
  return c.corpus.empty() ? defaults : c.corpus;
}

ExponentGrid p_grid_or(const ExperimentConfig& c, const ExponentGrid& defaults) {
  return c.p_grid.empty() ? defaults : ExponentGrid(c.p_grid);
}

std::vector<int> scales_or(const ExperimentConfig& c, std::vector<int> defaults) {
  return c.scales.empty() ? defaults : c.scales;
}

std::vector<double> lambdas_or(const ExperimentConfig& c, std::vector<double> defaults) {
  return c.lambdas.empty() ? defaults : c.lambdas;
}

std::vector<PhiSpec> phi_or(const ExperimentConfig& c, std::vector<PhiSpec> defaults) {
  return c.phi.empty() ? defaults : c.phi;
}

std::vector<std::size_t> points_1d(const ExperimentConfig& c, const PeriodicGrid& grid,
                                   const CorpusInfo& info) {
  if (c.placement == Placement::Random) return sample_points_1d(grid, c.points, c.seed, info);
  if (c.points > grid.size() || grid.size() % c.points != 0) {
    throw ConfigError("lattice placement needs points dividing " + std::to_string(grid.size()));
  }
  std::vector<std::size_t> out;
  const std::size_t stride = grid.size() / c.points;
  for (std::size_t k = 0; k < c.points; ++k) out.push_back(k * stride);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> points_2d(const ExperimentConfig& c,
                                                           const PeriodicGrid& grid,
                                                           const CorpusInfo& info) {
  if (c.placement == Placement::Random) return sample_points_2d(grid, grid, c.points, c.seed, info);
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(c.points))));
  if (side * side != c.points || side > grid.size() || grid.size() % side != 0) {
    throw ConfigError("2D lattice placement needs points = k^2 with k dividing N");
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t stride = grid.size() / side;
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t b = 0; b < side; ++b) out.emplace_back(a * stride, b * stride);
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double relative_change(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) fail(ErrorCode::InvalidArgument, "line fit needs two or more points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) fail(ErrorCode::InvalidArgument, "line fit needs distinct abscissae");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = y[i] - fit.intercept - fit.slope * x[i];
      rss += e * e;
    }
    fit.slope_stderr = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
  }
  return fit;
}

std::string fmt(double v) { return format_double(v); }

}  // namespace summa::lab
