#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace summa {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Uniform grid on the torus [-pi, pi). Cell j is [x_j, x_j + h).
class PeriodicGrid {
 public:
  /// Throws InvalidResolution unless n is a power of two and n >= 8.
  explicit PeriodicGrid(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double step() const noexcept { return kTwoPi / static_cast<double>(n_); }

  /// x_j = -pi + 2 pi j / N. Shared points of nested grids are bit-identical.
  double point(std::size_t j) const noexcept {
    return -kPi + (kTwoPi * static_cast<double>(j)) / static_cast<double>(n_);
  }

  /// Highest resolved frequency, N/2 - 1.
  std::size_t max_frequency() const noexcept { return n_ / 2 - 1; }

  /// Index of the grid point equal to x (up to 1e-9 cells), or throws NotAGridPoint.
  std::size_t index_of(double x) const;

  std::vector<double> points() const;

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

 private:
  std::size_t n_;
};

inline PeriodicGrid make_grid(std::size_t n) { return PeriodicGrid(n); }

class SampledFunction1D {
 public:
  SampledFunction1D(PeriodicGrid grid, std::vector<double> values);

  const PeriodicGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  PeriodicGrid grid_;
  std::vector<double> values_;
};

/// Row-major by x1 index: value(i1, i2) = values[i1 * N2 + i2].
class SampledFunction2D {
 public:
  SampledFunction2D(PeriodicGrid grid1, PeriodicGrid grid2, std::vector<double> values);

  const PeriodicGrid& grid1() const noexcept { return grid1_; }
  const PeriodicGrid& grid2() const noexcept { return grid2_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator()(std::size_t i1, std::size_t i2) const noexcept {
    return values_[i1 * grid2_.size() + i2];
  }

  /// f(., x2_index) as a function of x1.
  SampledFunction1D section_along_x1(std::size_t i2) const;
  /// f(x1_index, .) as a function of x2.
  SampledFunction1D section_along_x2(std::size_t i1) const;

 private:
  PeriodicGrid grid1_;
  PeriodicGrid grid2_;
  std::vector<double> values_;
};

/// Cell-sum quadrature, summed left to right.
double integrate(const SampledFunction1D& f);
double integrate(const SampledFunction2D& f);

/// Integral of |f|.
double l1_norm(const SampledFunction1D& f);
double l1_norm(const SampledFunction2D& f);

/// Cell area times the number of grid points with value > level.
double level_set_measure(const SampledFunction1D& f, double level);
double level_set_measure(const SampledFunction2D& f, double level);

SampledFunction1D scaled(const SampledFunction1D& f, double c);
SampledFunction2D scaled(const SampledFunction2D& f, double c);

}  // namespace summa
