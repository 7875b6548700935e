#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace summa {

/// Half-open arc [start, start + length) of the torus; start in [-pi, pi).
struct Interval {
  double start = 0;
  double length = 0;
  /// |f| average over the interval when produced by a decomposition, else 0.
  double average = 0;

  /// Midpoint, wrapped into [-pi, pi).
  double center() const noexcept;
};

/// Pairwise disjoint periodic intervals. Throws InvalidFamily on overlap,
/// non-positive length, or length above 2 pi.
class IntervalFamily {
 public:
  IntervalFamily() = default;
  explicit IntervalFamily(std::vector<Interval> intervals, double level = 0.0,
                          std::size_t source_size = 0);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }
  double level() const noexcept { return level_; }
  std::size_t source_size() const noexcept { return source_size_; }

  std::vector<double> centers() const;
  std::vector<double> lengths() const;
  double total_length() const noexcept;

 private:
  std::vector<Interval> intervals_;
  double level_ = 0;
  std::size_t source_size_ = 0;
};

/// Seeded family of `count` disjoint arcs covering `fill` of the torus, with
/// lengths spread over several orders of magnitude and a random rotation.
IntervalFamily random_family(std::size_t count, std::uint64_t seed, double fill = 0.5);

/// Wraps x into [-pi, pi).
double wrap_angle(double x) noexcept;

}  // namespace summa
