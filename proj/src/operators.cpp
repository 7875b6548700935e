#include "summa/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "summa/error.hpp"
#include "summa/kernels.hpp"
#include "summa/parallel.hpp"

namespace summa {

namespace {

std::vector<double> abs_values(const SampledFunction1D& f) {
  std::vector<double> g(f.size());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = std::abs(f[j]);
  return g;
}

// Linear interpolant of samples g at fractional index u (periodic).
double interpolate(const std::vector<double>& g, double u) {
  const double fl = std::floor(u);
  const double frac = u - fl;
  const auto n = static_cast<long>(g.size());
  long i = static_cast<long>(fl) % n;
  if (i < 0) i += n;
  const long i1 = (i + 1) % n;
  return (1.0 - frac) * g[static_cast<std::size_t>(i)] + frac * g[static_cast<std::size_t>(i1)];
}

void check_scale(int n, std::size_t grid_size) {
  if (n < 1 || static_cast<std::size_t>(n) > grid_size / 4) {
    fail(ErrorCode::InvalidScale, "scale n = " + std::to_string(n) + " outside [1, N/4]");
  }
}

void check_p(double p) {
  if (!(p > 1.0)) fail(ErrorCode::InvalidExponent, "Gabisonia operators need p > 1");
}

void check_variant(const GabisoniaVariant& variant, std::size_t grid_size) {
  if (variant.scales.empty()) fail(ErrorCode::InvalidScale, "empty scale set");
  for (int n : variant.scales) check_scale(n, grid_size);
}

// Integral of the interpolant over offsets [u0, u1] (cell units) from the anchor.
// Pieces are split at grid points, so the midpoint rule on each piece is exact
// for the linear interpolant.
double piecewise_integral(const std::vector<double>& g, double anchor, double u0, double u1, bool reflect) {
  double total = 0.0;
  double a = u0;
  while (a < u1) {
    const double b = std::min(u1, std::floor(a) + 1.0);
    const double step = (b - a) / kGabisoniaOversampling;
    double s = 0.0;
    for (int i = 0; i < kGabisoniaOversampling; ++i) {
      const double u = a + (i + 0.5) * step;
      s += interpolate(g, reflect ? anchor - u : anchor + u);
    }
    total += s * step;
    a = b;
  }
  return total;
}

std::vector<double> profile_from_abs(const std::vector<double>& g, double h, std::size_t j, int n,
                                     Sidedness sides) {
  const double width = 1.0 / (n * h);  // 1/n in cell units
  const int count = static_cast<int>(std::floor(n * kPi));
  const double anchor = static_cast<double>(j);
  std::vector<double> a(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    const double u0 = (k - 1) * width;
    const double u1 = k * width;
    double integral = piecewise_integral(g, anchor, u0, u1, false);
    if (sides == Sidedness::TwoSided) integral += piecewise_integral(g, anchor, u0, u1, true);
    a[static_cast<std::size_t>(k - 1)] = (static_cast<double>(n) / k) * (integral * h);
  }
  return a;
}

}  // namespace

std::vector<int> dyadic_scales(std::size_t grid_size) {
  std::vector<int> out;
  for (std::size_t n = 1; n <= grid_size / 4; n *= 2) out.push_back(static_cast<int>(n));
  return out;
}

GabisoniaVariant GabisoniaVariant::dyadic(std::size_t grid_size, Sidedness sides) {
  return {sides, dyadic_scales(grid_size)};
}

SampledFunction1D maximal_function(const SampledFunction1D& f) {
  const std::size_t n = f.size();
  const auto g = abs_values(f);
  std::vector<double> mf(n, 0.0);
  std::vector<double> avg(n), tail(n);
  for (std::size_t a = 0; a < n; ++a) {
    double s = 0.0;
    for (std::size_t len = 1; len <= n; ++len) {
      s += g[(a + len - 1) % n];
      avg[len - 1] = s / static_cast<double>(len);
    }
    // tail[d] = best average over arcs from a that still cover offset d.
    double best = 0.0;
    for (std::size_t d = n; d-- > 0;) {
      best = std::max(best, avg[d]);
      tail[d] = best;
    }
    for (std::size_t d = 0; d < n; ++d) {
      double& slot = mf[(a + d) % n];
      slot = std::max(slot, tail[d]);
    }
  }
  return SampledFunction1D(f.grid(), std::move(mf));
}

SampledFunction1D dyadic_maximal_function(const SampledFunction1D& f) {
  const std::size_t n = f.size();
  const auto g = abs_values(f);
  std::vector<double> mf(n, 0.0);
  for (std::size_t width = n; width >= 1; width /= 2) {
    for (std::size_t start = 0; start < n; start += width) {
      double s = 0.0;
      for (std::size_t i = start; i < start + width; ++i) s += g[i];
      const double a = s / static_cast<double>(width);
      for (std::size_t i = start; i < start + width; ++i) mf[i] = std::max(mf[i], a);
    }
  }
  return SampledFunction1D(f.grid(), std::move(mf));
}

std::vector<double> gabisonia_profile(const SampledFunction1D& f, std::size_t j, int n, Sidedness sides) {
  check_scale(n, f.size());
  if (j >= f.size()) fail(ErrorCode::NotAGridPoint, "grid index out of range");
  return profile_from_abs(abs_values(f), f.grid().step(), j, n, sides);
}

double gabisonia_from_profile(std::span<const double> profile, double p) {
  const double q = conjugate_exponent(p);
  const double top = kernels::max_value(profile);
  if (!(top > 0.0)) return 0.0;
  double s = 0.0;
  for (double a : profile) s += std::pow(a / top, q);
  return top * std::pow(s, 1.0 / q);
}

double gabisonia(const SampledFunction1D& f, std::size_t j, double p, const GabisoniaVariant& variant) {
  check_p(p);
  check_variant(variant, f.size());
  if (j >= f.size()) fail(ErrorCode::NotAGridPoint, "grid index out of range");
  const auto g = abs_values(f);
  double best = 0.0;
  for (int n : variant.scales) {
    best = std::max(best, gabisonia_from_profile(profile_from_abs(g, f.grid().step(), j, n, variant.sides), p));
  }
  return best;
}

SampledFunction1D gabisonia_field(const SampledFunction1D& f, double p, const GabisoniaVariant& variant) {
  check_p(p);
  check_variant(variant, f.size());
  const auto g = abs_values(f);
  std::vector<double> out(f.size());
  parallel_for(f.size(), [&](std::size_t j) {
    double best = 0.0;
    for (int n : variant.scales) {
      best = std::max(best, gabisonia_from_profile(profile_from_abs(g, f.grid().step(), j, n, variant.sides), p));
    }
    out[j] = best;
  });
  return SampledFunction1D(f.grid(), std::move(out));
}

namespace {

double normalized_from_abs(const std::vector<double>& g, double h, std::size_t j,
                           const ExponentGrid& grid, const GabisoniaVariant& variant) {
  std::vector<std::vector<double>> profiles;
  profiles.reserve(variant.scales.size());
  for (int n : variant.scales) profiles.push_back(profile_from_abs(g, h, j, n, variant.sides));
  double best = 0.0;
  for (double p : grid.values()) {
    double gp = 0.0;
    for (const auto& prof : profiles) gp = std::max(gp, gabisonia_from_profile(prof, p));
    best = std::max(best, gp / p_normalizer(p));
  }
  return best;
}

}  // namespace

double normalized_gabisonia(const SampledFunction1D& f, std::size_t j, const ExponentGrid& grid,
                            const GabisoniaVariant& variant) {
  check_variant(variant, f.size());
  if (j >= f.size()) fail(ErrorCode::NotAGridPoint, "grid index out of range");
  return normalized_from_abs(abs_values(f), f.grid().step(), j, grid, variant);
}

SampledFunction1D normalized_gabisonia_field(const SampledFunction1D& f, const ExponentGrid& grid,
                                             const GabisoniaVariant& variant) {
  check_variant(variant, f.size());
  const auto g = abs_values(f);
  std::vector<double> out(f.size());
  parallel_for(f.size(), [&](std::size_t j) {
    out[j] = normalized_from_abs(g, f.grid().step(), j, grid, variant);
  });
  return SampledFunction1D(f.grid(), std::move(out));
}

SampledFunction2D gabisonia_directional_2d(const SampledFunction2D& f, int axis, double p,
                                           const GabisoniaVariant& variant) {
  if (axis != 1 && axis != 2) fail(ErrorCode::InvalidArgument, "axis must be 1 or 2");
  check_p(p);
  const std::size_t n1 = f.grid1().size();
  const std::size_t n2 = f.grid2().size();
  std::vector<double> out(n1 * n2);
  if (axis == 1) {
    check_variant(variant, n1);
    parallel_for(n2, [&](std::size_t i2) {
      const auto section = f.section_along_x1(i2);
      const auto g = abs_values(section);
      for (std::size_t i1 = 0; i1 < n1; ++i1) {
        double best = 0.0;
        for (int n : variant.scales)
          best = std::max(best, gabisonia_from_profile(
                                    profile_from_abs(g, f.grid1().step(), i1, n, variant.sides), p));
        out[i1 * n2 + i2] = best;
      }
    });
  } else {
    check_variant(variant, n2);
    parallel_for(n1, [&](std::size_t i1) {
      const auto section = f.section_along_x2(i1);
      const auto g = abs_values(section);
      for (std::size_t i2 = 0; i2 < n2; ++i2) {
        double best = 0.0;
        for (int n : variant.scales)
          best = std::max(best, gabisonia_from_profile(
                                    profile_from_abs(g, f.grid2().step(), i2, n, variant.sides), p));
        out[i1 * n2 + i2] = best;
      }
    });
  }
  return SampledFunction2D(f.grid1(), f.grid2(), std::move(out));
}

double oskolkov_sum(const IntervalFamily& family, double x, double p) {
  const double q = conjugate_exponent(p);
  if (family.empty()) return 0.0;
  const auto c = family.centers();
  const auto l = family.lengths();
  std::vector<double> r(c.size());
  kernels::oskolkov_ratios(c, l, wrap_angle(x), r);
  double s = 0.0;
  for (double v : r) s += std::pow(v, q);
  return s;
}

double normalized_sup_p(const std::function<double(double)>& core, const ExponentGrid& grid,
                        SupMode mode) {
  double best = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid.p(i);
    double v = core(p);
    if (mode == SupMode::Rooted) v = std::pow(v, 1.0 / grid.q(i));
    best = std::max(best, v / p_normalizer(p));
  }
  return best;
}

}  // namespace summa
