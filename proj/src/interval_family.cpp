#include "summa/interval_family.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "summa/error.hpp"
#include "summa/grid.hpp"

namespace summa {

double wrap_angle(double x) noexcept {
  double y = std::fmod(x + kPi, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  y -= kPi;
  return y >= kPi ? -kPi : y;
}

double Interval::center() const noexcept { return wrap_angle(start + 0.5 * length); }

IntervalFamily::IntervalFamily(std::vector<Interval> intervals, double level, std::size_t source_size)
    : intervals_(std::move(intervals)), level_(level), source_size_(source_size) {
  constexpr double kSlack = 1e-12;
  for (auto& iv : intervals_) {
    if (!(iv.length > 0.0) || iv.length > kTwoPi + kSlack || !std::isfinite(iv.start)) {
      fail(ErrorCode::InvalidFamily, "interval length must lie in (0, 2pi]");
    }
    iv.start = wrap_angle(iv.start);
  }
  std::vector<Interval> sorted = intervals_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) { return a.start < b.start; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i].start + sorted[i].length > sorted[i + 1].start + kSlack) {
      fail(ErrorCode::InvalidFamily, "intervals overlap");
    }
  }
  if (sorted.size() > 1 &&
      sorted.back().start + sorted.back().length > sorted.front().start + kTwoPi + kSlack) {
    fail(ErrorCode::InvalidFamily, "intervals overlap across the periodic seam");
  }
}

std::vector<double> IntervalFamily::centers() const {
  std::vector<double> c;
  c.reserve(intervals_.size());
  for (const auto& iv : intervals_) c.push_back(iv.center());
  return c;
}

std::vector<double> IntervalFamily::lengths() const {
  std::vector<double> l;
  l.reserve(intervals_.size());
  for (const auto& iv : intervals_) l.push_back(iv.length);
  return l;
}

double IntervalFamily::total_length() const noexcept {
  double s = 0.0;
  for (const auto& iv : intervals_) s += iv.length;
  return s;
}

IntervalFamily random_family(std::size_t count, std::uint64_t seed, double fill) {
  if (count == 0) return IntervalFamily();
  if (!(fill > 0.0 && fill < 1.0)) fail(ErrorCode::InvalidArgument, "fill must lie in (0, 1)");
  std::mt19937_64 rng(seed);
  auto unit = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<double> len(count), gap(count);
  double len_total = 0.0, gap_total = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    len[k] = std::pow(unit(), 3.0);
    gap[k] = unit();
    len_total += len[k];
    gap_total += gap[k];
  }
  std::vector<Interval> out;
  double x = -kPi + kTwoPi * unit();
  for (std::size_t k = 0; k < count; ++k) {
    const double l = len[k] / len_total * fill * kTwoPi;
    out.push_back({x, l, 0.0});
    x += l + gap[k] / gap_total * (1.0 - fill) * kTwoPi;
  }
  return IntervalFamily(std::move(out));
}

}  // namespace summa
