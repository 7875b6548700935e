#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "common.hpp"
#include "summa/error.hpp"
#include "summa/parallel.hpp"

namespace summa::lab {

namespace {

constexpr double kMonotoneFraction = 0.95;
constexpr double kMedianDrop = 2.0;
constexpr std::size_t kUvSamples = 200;
constexpr int kUvTerms = 400;

std::vector<int> dyadic_levels(std::size_t max_index) {
  std::vector<int> out;
  for (int n = 8; n <= 64 && static_cast<std::size_t>(n) <= max_index; n *= 2) out.push_back(n);
  return out;
}

// Shared protocol: per point, the value sequence over the dyadic levels must be
// non-increasing at >= 95% of points, and the median must drop >= 2x from the
// first level to the last.
void convergence_verdict(RunResult& r, const std::string& label,
                         const std::vector<std::vector<double>>& per_point) {
  if (per_point.empty()) fail(ErrorCode::InvalidArgument, "no sample points");
  const std::size_t levels = per_point.front().size();
  std::size_t monotone = 0;
  std::vector<double> first, last;
  for (const auto& seq : per_point) {
    bool ok = true;
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (seq[i] > seq[i - 1]) ok = false;
    if (ok) ++monotone;
    first.push_back(seq.front());
    last.push_back(seq.back());
  }
  const double fraction = static_cast<double>(monotone) / static_cast<double>(per_point.size());
  const double m_first = median(first);
  const double m_last = median(last);
  const bool drop_ok = m_last == 0.0 || (m_first > 0.0 && m_first / m_last >= kMedianDrop);
  r.constants[label + ":monotone_fraction"] = fraction;
  r.constants[label + ":median_first"] = m_first;
  r.constants[label + ":median_last"] = m_last;
  r.check(label + ": non-increasing at >= 95% of points", levels >= 2 && fraction >= kMonotoneFraction,
          std::to_string(monotone) + " of " + std::to_string(per_point.size()));
  r.check(label + ": median drops >= 2x", drop_ok, fmt(m_first) + " -> " + fmt(m_last));
}

using PointMean2D = std::function<double(const PrefixField&, double, int)>;

void converge_2d(const ExperimentConfig& c, RunResult& r, const std::vector<std::string>& names,
                 const std::vector<std::pair<std::string, PointMean2D>>& means) {
  const PeriodicGrid grid(c.grid_size);
  const auto levels = scales_or(c, dyadic_levels(grid.max_frequency() + 1));
  std::size_t offset = 0;
  for (const auto& name : names) {
    const auto info = corpus_info(name);
    const auto f = corpus_2d(name, grid, grid);
    const auto spec = analyze_2d(f);
    const auto pts = points_2d(c, grid, info);
    std::vector<std::vector<std::vector<double>>> values(means.size(),
                                                        std::vector<std::vector<double>>(pts.size()));
    parallel_for(pts.size(), [&](std::size_t k) {
      const auto [a, b] = pts[k];
      const auto field = prefix_field_at_index(spec, a, b);
      for (std::size_t q = 0; q < means.size(); ++q)
        for (int n : levels) values[q][k].push_back(means[q].second(field, f(a, b), n));
    });
    for (std::size_t k = 0; k < pts.size(); ++k)
      for (std::size_t q = 0; q < means.size(); ++q)
        for (std::size_t i = 0; i < levels.size(); ++i)
          r.report.records.push_back({offset + k, grid.point(pts[k].first), grid.point(pts[k].second),
                                      levels[i], levels[i], means[q].first, values[q][k][i]});
    for (std::size_t q = 0; q < means.size(); ++q) convergence_verdict(r, name + ":" + means[q].first, values[q]);
    offset += pts.size();
  }
}

}  // namespace

void verify_uv(const ExperimentConfig&, RunResult& r) {
  const auto s = log_spaced(1.0, 1e6, kUvSamples);
  const auto report = u_v_domination(s, kUvTerms);
  for (std::size_t i = 0; i < s.size(); ++i) {
    r.report.records.push_back(
        {i, s[i], 0.0, 0, 0, "d=" + fmt(report.d_star), log_v(s[i], report.d_star, kUvTerms) - log_u(s[i])});
  }
  r.constants["d_star"] = report.d_star;
  r.constants["min_log_margin"] = report.min_log_margin;
  r.check("d* <= 32 with u <= v_K on every sample", report.d_star <= 32.0 && report.min_log_margin >= 0.0,
          "d* = " + fmt(report.d_star));
  r.check("k(s) bracketing at every sample", report.bracketing_holds);
}

void verify_trigpoly_decay(const ExperimentConfig& c, RunResult& r) {
  const PeriodicGrid grid(c.grid_size);
  const int top = static_cast<int>(c.grid_size / 4);
  std::mt19937_64 rng(c.seed);
  std::size_t checked = 0, violations = 0, offset = 0;
  double worst = 0.0;
  for (std::size_t k = 0; k < c.families; ++k) {
    const int s1 = 1 + static_cast<int>(rng() % 7);
    const int s2 = 1 + static_cast<int>(rng() % 7);
    const auto name = "random-trigpoly(" + std::to_string(s1) + "," + std::to_string(s2) + "," +
                      std::to_string(c.seed + k) + ")";
    const auto f = corpus_2d(name, grid, grid);
    const auto spec = analyze_2d(f);
    const auto pts = points_2d(c, grid, corpus_info(name));
    std::vector<std::vector<MeanRecord>> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t q) {
      const auto [a, b] = pts[q];
      const auto field = prefix_field_at_index(spec, a, b);
      const auto dc = trigpoly_decay_constants(field, f(a, b), s1, s2, 2.0);
      for (int n = 1; n <= top; n *= 2) {
        if (n < 2 * s1) continue;
        for (int m = 1; m <= top; m *= 2) {
          if (m < 2 * s2) continue;
          const double mean = strong_mean_2d(field, f(a, b), n, m, 2.0);
          const double bound = dc.c1 / n + dc.c2 / m;
          rows[q].push_back({offset + q, grid.point(a), grid.point(b), n, m, "2",
                             bound > 0.0 ? mean / bound : (mean > 0.0 ? INFINITY : 0.0)});
        }
      }
    });
    for (auto& row : rows)
      for (auto& rec : row) {
        ++checked;
        worst = std::max(worst, rec.value);
        // Rounding slack: both sides are sums of O(N^2) terms.
        if (rec.value > 1.0 + 1e-9) ++violations;
        r.report.records.push_back(std::move(rec));
      }
    offset += pts.size();
  }
  r.constants["checked"] = static_cast<double>(checked);
  r.constants["max_ratio"] = worst;
  r.check("strong mean <= c1/n + c2/m", violations == 0 && checked > 0,
          std::to_string(violations) + " of " + std::to_string(checked) + " (n, m, point) triples fail");
}

void converge_theorem(const ExperimentConfig& c, RunResult& r) {
  std::vector<std::pair<std::string, PointMean2D>> means;
  for (const auto& phi : phi_or(c, {PhiSpec::exp_sqrt_loglog(1.0)})) {
    means.emplace_back(phi.name(), [phi](const PrefixField& field, double fv, int n) {
      return phi_strong_mean_2d(field, fv, n, n, phi);
    });
  }
  converge_2d(c, r, corpus_or(c, {"product-log-singular"}), means);
}

void converge_jmz(const ExperimentConfig& c, RunResult& r) {
  converge_2d(c, r, corpus_or(c, {"product-log-singular"}),
              {{"C11", [](const PrefixField& field, double fv, int n) { return cesaro_deviation(field, fv, n, n); }}});
}

void converge_rodin_1d(const ExperimentConfig& c, RunResult& r) {
  const PeriodicGrid grid(c.grid_size);
  const auto levels = scales_or(c, dyadic_levels(grid.max_frequency() + 1));
  const auto phis = phi_or(c, {PhiSpec::exp_linear(1.0)});
  std::size_t offset = 0;
  for (const auto& name : corpus_or(c, {"log-singular"})) {
    const auto info = corpus_info(name);
    const auto f = corpus_1d(name, grid);
    const auto spec = analyze_1d(f);
    const auto pts = points_1d(c, grid, info);
    std::vector<std::vector<std::vector<double>>> values(phis.size(), std::vector<std::vector<double>>(pts.size()));
    parallel_for(pts.size(), [&](std::size_t k) {
      const auto field = prefix_field_1d_at_index(spec, pts[k]);
      for (std::size_t q = 0; q < phis.size(); ++q)
        for (int n : levels) values[q][k].push_back(phi_strong_mean_2d(field, f[pts[k]], n, 1, phis[q]));
    });
    for (std::size_t k = 0; k < pts.size(); ++k)
      for (std::size_t q = 0; q < phis.size(); ++q)
        for (std::size_t i = 0; i < levels.size(); ++i)
          r.report.records.push_back(
              {offset + k, grid.point(pts[k]), 0.0, levels[i], 1, phis[q].name(), values[q][k][i]});
    for (std::size_t q = 0; q < phis.size(); ++q) convergence_verdict(r, name + ":" + phis[q].name(), values[q]);
    offset += pts.size();
  }
}

}  // namespace summa::lab
