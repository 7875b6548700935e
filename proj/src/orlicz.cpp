#include "summa/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "summa/error.hpp"
#include "summa/parallel.hpp"

namespace summa {

namespace {

// Per-row partial sums merged in row order, so thread count cannot change the result.
double modular_of(std::span<const double> v, std::size_t rows, std::size_t cols, double cell, double scale) {
  std::vector<double> partial(rows, 0.0);
  parallel_for(rows, [&](std::size_t r) {
    double s = 0.0;
    for (std::size_t c = 0; c < cols; ++c) s += young(std::abs(v[r * cols + c]) / scale);
    partial[r] = s;
  });
  double s = 0.0;
  for (double p : partial) s += p;
  return cell * s;
}

double norm_of(std::span<const double> v, std::size_t rows, std::size_t cols, double cell, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be > 0");
  double top = 0.0;
  for (double x : v) top = std::max(top, std::abs(x));
  if (top == 0.0) return 0.0;
  auto feasible = [&](double lambda) { return modular_of(v, rows, cols, cell, lambda) <= 1.0; };
  // top is feasible (every |f| / top <= 1); halve until the predicate fails.
  double hi = top;
  double lo = 0.5 * top;
  int halvings = 0;
  while (feasible(lo)) {
    hi = lo;
    lo *= 0.5;
    if (++halvings > 2000 || lo == 0.0) fail(ErrorCode::BisectionFailure, "no infeasible lower bracket");
  }
  for (int it = 0; it < kLuxemburgMaxIterations; ++it) {
    if (hi - lo <= tol * hi) return hi;
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  fail(ErrorCode::BisectionFailure, "Luxemburg bisection did not converge");
}

}  // namespace

double young(double t) {
  if (t < 0.0 || std::isnan(t)) fail(ErrorCode::DomainError, "Young function needs t >= 0");
  return t > 1.0 ? t * std::log(t) : 0.0;
}

double modular(const SampledFunction1D& f) {
  return modular_of(f.values(), 1, f.size(), f.grid().step(), 1.0);
}

double modular(const SampledFunction2D& f) {
  return modular_of(f.values(), f.grid1().size(), f.grid2().size(), f.grid1().step() * f.grid2().step(), 1.0);
}

double luxemburg_norm(const SampledFunction1D& f, double tol) {
  return norm_of(f.values(), 1, f.size(), f.grid().step(), tol);
}

double luxemburg_norm(const SampledFunction2D& f, double tol) {
  return norm_of(f.values(), f.grid1().size(), f.grid2().size(), f.grid1().step() * f.grid2().step(), tol);
}

SandwichReport sandwich_check(const SampledFunction2D& f) {
  SandwichReport r;
  r.norm = luxemburg_norm(f);
  if (r.norm == 0.0) fail(ErrorCode::InvalidArgument, "sandwich check needs f != 0");
  const auto g = scaled(f, 1.0 / r.norm);
  r.normalized_norm = luxemburg_norm(g);
  r.modular = modular(g);
  r.lower = 0.5 * (1.0 + r.modular);
  r.upper = 1.0 + r.modular;
  if (r.lower > r.normalized_norm + kSandwichSlack || r.normalized_norm > r.upper + kSandwichSlack) {
    fail(ErrorCode::InvariantViolation, "norm-modular sandwich fails");
  }
  return r;
}

bool delta2_holds(const std::vector<double>& t_samples) {
  for (double t : t_samples) {
    const double lhs = young(2.0 * t);
    const double rhs = 2.0 * young(t) + 2.0 * t * std::numbers::ln2;
    if (lhs > rhs * (1.0 + 1e-12)) return false;
  }
  return true;
}

}  // namespace summa
