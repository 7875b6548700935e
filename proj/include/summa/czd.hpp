#pragma once

#include <cstddef>
#include <vector>

#include "summa/grid.hpp"
#include "summa/interval_family.hpp"

namespace summa {

/// Stopping-time dyadic Calderon-Zygmund selection at threshold sqrt(lambda),
/// starting from the root [-pi, pi). Interval averages are means of |f| over the
/// grid cells they contain. Throws InvalidThreshold for lambda <= 0 and
/// LevelTooLow when the mean of |f| already exceeds sqrt(lambda).
IntervalFamily decompose(const SampledFunction1D& f, double lambda);

struct DilatedSet {
  std::vector<bool> cells;  ///< cell j covers [x_j, x_j + h)
  double measure = 0;
};

/// Union of the concentric dilations of the family's intervals, clipped to the
/// torus; a cell counts when it lies entirely inside some dilated interval.
/// Throws InvalidDilation for factor < 1.
DilatedSet dilate_union(const IntervalFamily& family, double factor);

struct CzdCheck {
  bool disjoint = true;
  bool dyadic = true;
  std::size_t average_violations = 0;  ///< intervals outside (sqrt(lambda), 2 sqrt(lambda)]
  double total_length = 0;
  double measure_bound = 0;            ///< ||f||_1 / sqrt(lambda)
  std::size_t outside_violations = 0;  ///< dyadic intervals off the family with average > sqrt(lambda)
  bool ok() const noexcept {
    return disjoint && dyadic && average_violations == 0 && total_length <= measure_bound &&
           outside_violations == 0;
  }
};

/// Recomputes every selected average and scans the whole dyadic tree.
CzdCheck check_decomposition(const SampledFunction1D& f, const IntervalFamily& family);

}  // namespace summa
