#include "summa/means.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "summa/error.hpp"
#include "summa/kernels.hpp"

namespace summa {

namespace {

void check_block(const PrefixField& field, int n, int m) {
  if (n < 1 || m < 1 || static_cast<std::size_t>(n) > field.rows() ||
      static_cast<std::size_t>(m) > field.cols()) {
    fail(ErrorCode::InvalidScale, "mean block (" + std::to_string(n) + ", " + std::to_string(m) +
                                      ") exceeds the prefix field");
  }
}

double power_sum(std::span<const double> d, double p) {
  if (p == 1.0) return kernels::sum(d);
  if (p == 2.0) return kernels::sum_squares(d);
  double s = 0.0;
  for (double v : d) s += std::pow(v, p);
  return s;
}

// (mean of d^p)^{1/p}, factoring out the maximum so large p cannot overflow.
double rooted_power_mean(std::span<const double> d, double p) {
  const double top = kernels::max_value(d);
  if (!(top > 0.0)) return 0.0;
  double s = 0.0;
  for (double v : d) s += std::pow(v / top, p);
  return top * std::pow(s / static_cast<double>(d.size()), 1.0 / p);
}

std::size_t wrap_index(long j, std::size_t n) {
  const auto nn = static_cast<long>(n);
  return static_cast<std::size_t>(((j % nn) + nn) % nn);
}

}  // namespace

double conjugate_exponent(double p) {
  if (!(p > 1.0)) fail(ErrorCode::InvalidExponent, "conjugate exponent needs p > 1");
  return p / (p - 1.0);
}

double p_normalizer(double p) { return p * std::log(std::log(p + 2.0)); }

ExponentGrid::ExponentGrid(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) fail(ErrorCode::InvalidExponent, "exponent grid is empty");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] > 1.0) || !std::isfinite(p_[i])) fail(ErrorCode::InvalidExponent, "grid exponents must be > 1");
    if (i > 0 && !(p_[i] > p_[i - 1])) fail(ErrorCode::InvalidExponent, "grid exponents must increase");
    q_.push_back(conjugate_exponent(p_[i]));
  }
}

ExponentGrid ExponentGrid::defaults() {
  return ExponentGrid({1.0625, 1.125, 1.25, 1.5, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64});
}

ExponentGrid ExponentGrid::capped(double p_max) const {
  std::vector<double> kept;
  for (double p : p_)
    if (p <= p_max) kept.push_back(p);
  return ExponentGrid(std::move(kept));
}

void MeanReport::sort() {
  std::stable_sort(records.begin(), records.end(), [](const MeanRecord& a, const MeanRecord& b) {
    if (a.point_id != b.point_id) return a.point_id < b.point_id;
    if (a.n != b.n) return a.n < b.n;
    return a.m < b.m;
  });
}

std::vector<double> deviations(const PrefixField& field, double f_value, int n, int m) {
  check_block(field, n, m);
  const auto um = static_cast<std::size_t>(m);
  std::vector<double> out(static_cast<std::size_t>(n) * um);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    kernels::abs_diff(field.row(i).first(um), f_value, std::span<double>(out).subspan(i * um, um));
  }
  return out;
}

double strong_mean_2d(const PrefixField& field, double f_value, int n, int m, double p) {
  if (!(p > 0.0)) fail(ErrorCode::InvalidExponent, "strong mean exponent must be > 0");
  const auto d = deviations(field, f_value, n, m);
  return power_sum(d, p) / static_cast<double>(d.size());
}

double phi_strong_mean_2d(const PrefixField& field, double f_value, int n, int m, const PhiSpec& phi) {
  const auto d = deviations(field, f_value, n, m);
  double s = 0.0;
  for (double v : d) s += phi_eval(phi, v);
  return s / static_cast<double>(d.size());
}

double cesaro_deviation(const PrefixField& field, double f_value, int n, int m) {
  check_block(field, n, m);
  const auto um = static_cast<std::size_t>(m);
  double s = 0.0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) s += kernels::sum(field.row(i).first(um));
  return std::abs(s / (static_cast<double>(n) * static_cast<double>(m)) - f_value);
}

double sup_p_normalized_mean(const PrefixField& field, int n, int m, const ExponentGrid& grid) {
  const auto d = deviations(field, 0.0, n, m);
  double best = 0.0;
  for (double p : grid.values()) {
    best = std::max(best, rooted_power_mean(d, p) / (p * p_normalizer(p)));
  }
  return best;
}

std::pair<std::vector<double>, std::vector<double>> truncate_split(std::span<const double> values,
                                                                   double s) {
  if (!(s > 0.0)) fail(ErrorCode::InvalidThreshold, "truncation level must be > 0");
  std::vector<double> kept(values.size()), rest(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) <= s) {
      kept[i] = values[i];
    } else {
      rest[i] = values[i];
    }
  }
  return {std::move(kept), std::move(rest)};
}

double exceedance_ratio(const PrefixField& field, double f_value, double eps, int n, int m) {
  if (!(eps > 0.0)) fail(ErrorCode::InvalidThreshold, "exceedance level must be > 0");
  const auto d = deviations(field, f_value, n, m);
  const double total = static_cast<double>(d.size());
  const double r = static_cast<double>(kernels::count_greater(d, eps)) / total;
  const double chebyshev = kernels::sum(d) / total / eps;
  if (r > chebyshev * (1.0 + 1e-12)) {
    fail(ErrorCode::InvariantViolation, "exceedance ratio violates the Chebyshev bound");
  }
  return r;
}

DecayConstants trigpoly_decay_constants(const PrefixField& field, double f_value, int s1, int s2,
                                        double p) {
  if (s1 < 0 || s2 < 0 || static_cast<std::size_t>(s1) >= field.rows() ||
      static_cast<std::size_t>(s2) >= field.cols()) {
    fail(ErrorCode::InvalidScale, "polynomial degree exceeds the prefix field");
  }
  auto term = [&](int i, int j) {
    return std::pow(std::abs(field(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) - f_value), p);
  };
  DecayConstants c;
  double cross = 0.0;
  for (int i = 0; i < s1; ++i) {
    c.c1 += term(i, s2);
    for (int j = 0; j < s2; ++j) cross += term(i, j);
  }
  c.c1 += cross / static_cast<double>(s2 + 1);
  for (int j = 0; j < s2; ++j) c.c2 += term(s1, j);
  return c;
}

std::vector<std::size_t> sample_points_1d(const PeriodicGrid& grid, std::size_t count,
                                          std::uint64_t seed, const CorpusInfo& info) {
  count = std::min(count, grid.size());
  std::vector<std::size_t> out;
  std::set<std::size_t> used;
  auto take = [&](std::size_t j) {
    if (out.size() < count && used.insert(j).second) out.push_back(j);
  };
  if (info.singular_x1) {
    const auto s = static_cast<long>(grid.index_of(*info.singular_x1));
    for (long off : {-1L, 1L, -2L, 2L}) take(wrap_index(s + off, grid.size()));
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) take(static_cast<std::size_t>(rng() % grid.size()));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> sample_points_2d(const PeriodicGrid& grid1,
                                                                  const PeriodicGrid& grid2,
                                                                  std::size_t count,
                                                                  std::uint64_t seed,
                                                                  const CorpusInfo& info) {
  count = std::min(count, grid1.size() * grid2.size());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::set<std::pair<std::size_t, std::size_t>> used;
  auto take = [&](std::size_t a, std::size_t b) {
    if (out.size() < count && used.insert({a, b}).second) out.emplace_back(a, b);
  };
  if (info.singular_x1 || info.singular_x2) {
    const auto s1 = static_cast<long>(grid1.index_of(info.singular_x1.value_or(0.0)));
    const auto s2 = static_cast<long>(grid2.index_of(info.singular_x2.value_or(0.0)));
    for (long a : {-1L, 1L})
      for (long b : {-1L, 1L}) take(wrap_index(s1 + a, grid1.size()), wrap_index(s2 + b, grid2.size()));
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    const std::size_t a = static_cast<std::size_t>(rng() % grid1.size());
    const std::size_t b = static_cast<std::size_t>(rng() % grid2.size());
    take(a, b);
  }
  return out;
}

}  // namespace summa
