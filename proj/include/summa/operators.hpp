#pragma once

#include <functional>
#include <span>
#include <vector>

#include "summa/grid.hpp"
#include "summa/interval_family.hpp"
#include "summa/means.hpp"

namespace summa {

/// Discrete Hardy-Littlewood maximal function: the sup of |f| averages over all
/// grid-aligned periodic arcs containing the cell. O(N^2).
SampledFunction1D maximal_function(const SampledFunction1D& f);

/// Same supremum restricted to dyadic subintervals of [-pi, pi).
SampledFunction1D dyadic_maximal_function(const SampledFunction1D& f);

enum class Sidedness { TwoSided, OneSided };

/// Selects G_p^(n) (fixed n) or its supremum over a finite scale set.
struct GabisoniaVariant {
  Sidedness sides = Sidedness::TwoSided;
  std::vector<int> scales;  ///< one entry for the fixed-n mode

  static GabisoniaVariant fixed(int n, Sidedness sides = Sidedness::TwoSided) {
    return {sides, {n}};
  }
  /// {1, 2, 4, ..., N/4}.
  static GabisoniaVariant dyadic(std::size_t grid_size, Sidedness sides = Sidedness::TwoSided);
};

/// {1, 2, 4, ..., N/4}.
std::vector<int> dyadic_scales(std::size_t grid_size);

/// Midpoints per grid-cell piece in the composite rule for the local integrals.
inline constexpr int kGabisoniaOversampling = 8;

/// a_k = (n/k) * I_k, k = 1..floor(n pi), where I_k integrates the linear
/// interpolant of |f| (plus its reflection when two-sided) over [(k-1)/n, k/n]
/// from the grid point x_j. Independent of p.
std::vector<double> gabisonia_profile(const SampledFunction1D& f, std::size_t j, int n, Sidedness sides);

/// (sum_k a_k^q)^{1/q}, q = p/(p-1).
double gabisonia_from_profile(std::span<const double> profile, double p);

/// G_p^(n) f(x_j), or the max over the variant's scales. Throws InvalidExponent
/// for p <= 1 and InvalidScale for n outside [1, N/4].
double gabisonia(const SampledFunction1D& f, std::size_t j, double p, const GabisoniaVariant& variant);

/// The operator at every grid point.
SampledFunction1D gabisonia_field(const SampledFunction1D& f, double p, const GabisoniaVariant& variant);

/// sup over the grid's p of (sup over scales of G_p^(n) f(x_j)) / (p ln ln(p+2)).
double normalized_gabisonia(const SampledFunction1D& f, std::size_t j, const ExponentGrid& grid,
                            const GabisoniaVariant& variant);
SampledFunction1D normalized_gabisonia_field(const SampledFunction1D& f, const ExponentGrid& grid,
                                             const GabisoniaVariant& variant);

/// Applies the operator along one axis to every section; axis 1 acts on x1.
SampledFunction2D gabisonia_directional_2d(const SampledFunction2D& f, int axis, double p,
                                           const GabisoniaVariant& variant);

/// sum_j (|D_j| / (|x - c_j| + |D_j|))^q with arc distance. Throws InvalidExponent for p <= 1.
double oskolkov_sum(const IntervalFamily& family, double x, double p);

enum class SupMode { Raw, Rooted };

/// max over the grid of core(p) / (p ln ln(p+2)); rooted mode uses core(p)^{1/q}.
double normalized_sup_p(const std::function<double(double)>& core, const ExponentGrid& grid,
                        SupMode mode);

}  // namespace summa
