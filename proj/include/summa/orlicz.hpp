#pragma once

#include <vector>

#include "summa/grid.hpp"

namespace summa {

/// M(t) = t log+ t. Throws DomainError for t < 0.
double young(double t);

/// Cell-weighted sum of M(|f|).
double modular(const SampledFunction1D& f);
double modular(const SampledFunction2D& f);

inline constexpr double kLuxemburgTolerance = 1e-10;
inline constexpr int kLuxemburgMaxIterations = 200;

/// inf{lambda > 0 : modular(f / lambda) <= 1}, located by bisection on the
/// feasibility predicate until the bracket width is <= tol * lambda.
/// Returns 0 for f == 0; throws BisectionFailure if the bracket does not close.
double luxemburg_norm(const SampledFunction1D& f, double tol = kLuxemburgTolerance);
double luxemburg_norm(const SampledFunction2D& f, double tol = kLuxemburgTolerance);

struct SandwichReport {
  double norm = 0;             ///< ||f||_M
  double normalized_norm = 0;  ///< ||f / ||f||_M||_M, 1 up to the bisection tolerance
  double modular = 0;          ///< modular of the normalized function
  double lower = 0;            ///< 0.5 (1 + modular)
  double upper = 0;            ///< 1 + modular
};

inline constexpr double kSandwichSlack = 1e-6;

/// Normalizes f to unit Luxemburg norm and checks lower <= 1 <= upper.
/// Throws InvalidArgument for f == 0 and InvariantViolation if either side fails.
SandwichReport sandwich_check(const SampledFunction2D& f);

/// True when M(2t) <= 2 M(t) + 2 t log 2 at every sample (relative slack 1e-12).
bool delta2_holds(const std::vector<double>& t_samples);

}  // namespace summa
