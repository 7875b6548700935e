#include "summa/grid.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "summa/error.hpp"

namespace summa {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidResolution: return "invalid-resolution";
    case ErrorCode::UnknownCorpusEntry: return "unknown-corpus-entry";
    case ErrorCode::FrequencyOutOfRange: return "frequency-out-of-range";
    case ErrorCode::ImaginaryResidue: return "imaginary-residue";
    case ErrorCode::NotAGridPoint: return "not-a-grid-point";
    case ErrorCode::InvalidExponent: return "invalid-exponent";
    case ErrorCode::InvalidThreshold: return "invalid-threshold";
    case ErrorCode::InvalidScale: return "invalid-scale";
    case ErrorCode::InvalidFamily: return "invalid-family";
    case ErrorCode::LevelTooLow: return "level-too-low";
    case ErrorCode::InvalidDilation: return "invalid-dilation";
    case ErrorCode::BisectionFailure: return "bisection-failure";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::DominationFailure: return "domination-failure";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvariantViolation: return "invariant-violation";
    case ErrorCode::Io: return "io-error";
  }
  return "unknown";
}

PeriodicGrid::PeriodicGrid(std::size_t n) : n_(n) {
  if (n < 8 || !std::has_single_bit(n)) {
    fail(ErrorCode::InvalidResolution,
         "grid size must be a power of two >= 8, got " + std::to_string(n));
  }
}

std::size_t PeriodicGrid::index_of(double x) const {
  const double u = (x + kPi) / step();
  const double r = std::round(u);
  if (!std::isfinite(u) || std::abs(u - r) > 1e-9 || r < 0.0 ||
      r >= static_cast<double>(n_)) {
    fail(ErrorCode::NotAGridPoint, "x = " + std::to_string(x) + " is not a grid point");
  }
  return static_cast<std::size_t>(r);
}

std::vector<double> PeriodicGrid::points() const {
  std::vector<double> xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = point(j);
  return xs;
}

namespace {

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "sampled values must be finite");
  }
}

}  // namespace

SampledFunction1D::SampledFunction1D(PeriodicGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    fail(ErrorCode::InvalidArgument, "value count does not match grid size");
  }
  require_finite(values_);
}

SampledFunction2D::SampledFunction2D(PeriodicGrid grid1, PeriodicGrid grid2,
                                     std::vector<double> values)
    : grid1_(grid1), grid2_(grid2), values_(std::move(values)) {
  if (values_.size() != grid1_.size() * grid2_.size()) {
    fail(ErrorCode::InvalidArgument, "value count does not match grid sizes");
  }
  require_finite(values_);
}

SampledFunction1D SampledFunction2D::section_along_x1(std::size_t i2) const {
  std::vector<double> v(grid1_.size());
  for (std::size_t i1 = 0; i1 < grid1_.size(); ++i1) v[i1] = (*this)(i1, i2);
  return SampledFunction1D(grid1_, std::move(v));
}

SampledFunction1D SampledFunction2D::section_along_x2(std::size_t i1) const {
  const auto row = values_.begin() + static_cast<std::ptrdiff_t>(i1 * grid2_.size());
  return SampledFunction1D(grid2_, std::vector<double>(row, row + static_cast<std::ptrdiff_t>(grid2_.size())));
}

double integrate(const SampledFunction1D& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return f.grid().step() * s;
}

double integrate(const SampledFunction2D& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return f.grid1().step() * f.grid2().step() * s;
}

double l1_norm(const SampledFunction1D& f) {
  double s = 0.0;
  for (double v : f.values()) s += std::abs(v);
  return f.grid().step() * s;
}

double l1_norm(const SampledFunction2D& f) {
  double s = 0.0;
  for (double v : f.values()) s += std::abs(v);
  return f.grid1().step() * f.grid2().step() * s;
}

namespace {

std::size_t count_above(std::span<const double> values, double level) {
  std::size_t c = 0;
  for (double v : values) c += v > level ? 1 : 0;
  return c;
}

}  // namespace

double level_set_measure(const SampledFunction1D& f, double level) {
  return f.grid().step() * static_cast<double>(count_above(f.values(), level));
}

double level_set_measure(const SampledFunction2D& f, double level) {
  return f.grid1().step() * f.grid2().step() *
         static_cast<double>(count_above(f.values(), level));
}

SampledFunction1D scaled(const SampledFunction1D& f, double c) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x *= c;
  return SampledFunction1D(f.grid(), std::move(v));
}

SampledFunction2D scaled(const SampledFunction2D& f, double c) {
  std::vector<double> v(f.values().begin(), f.values().end());
  for (double& x : v) x *= c;
  return SampledFunction2D(f.grid1(), f.grid2(), std::move(v));
}

}  // namespace summa
