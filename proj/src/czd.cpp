#include "summa/czd.hpp"

#include <cmath>

#include "summa/error.hpp"

namespace summa {

namespace {

// Heap-ordered sums of |f|: node 1 is the root, leaves start at n.
std::vector<double> dyadic_sums(const SampledFunction1D& f) {
  const std::size_t n = f.size();
  std::vector<double> tree(2 * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) tree[n + j] = std::abs(f[j]);
  for (std::size_t k = n - 1; k >= 1; --k) tree[k] = tree[2 * k] + tree[2 * k + 1];
  return tree;
}

struct Node {
  std::size_t first;
  std::size_t cells;
};

Node node_span(std::size_t k, std::size_t n) {
  std::size_t depth_width = n;
  std::size_t level_start = 1;
  while (level_start * 2 <= k) {
    level_start *= 2;
    depth_width /= 2;
  }
  return {(k - level_start) * depth_width, depth_width};
}

}  // namespace

IntervalFamily decompose(const SampledFunction1D& f, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) fail(ErrorCode::InvalidThreshold, "lambda must be > 0");
  const double t = std::sqrt(lambda);
  const std::size_t n = f.size();
  const auto tree = dyadic_sums(f);
  if (tree[1] / static_cast<double>(n) > t) {
    fail(ErrorCode::LevelTooLow, "mean of |f| exceeds sqrt(lambda)");
  }
  const double h = f.grid().step();
  std::vector<Interval> picked;
  std::vector<std::size_t> stack{1};
  while (!stack.empty()) {
    const std::size_t k = stack.back();
    stack.pop_back();
    const Node span = node_span(k, n);
    const double avg = tree[k] / static_cast<double>(span.cells);
    if (k > 1 && avg > t) {
      picked.push_back({f.grid().point(span.first), static_cast<double>(span.cells) * h, avg});
      continue;
    }
    if (span.cells > 1) {
      stack.push_back(2 * k + 1);
      stack.push_back(2 * k);
    }
  }
  return IntervalFamily(std::move(picked), lambda, n);
}

DilatedSet dilate_union(const IntervalFamily& family, double factor) {
  if (!(factor >= 1.0)) fail(ErrorCode::InvalidDilation, "dilation factor must be >= 1");
  if (family.source_size() == 0) fail(ErrorCode::InvalidArgument, "family has no source grid");
  const PeriodicGrid grid(family.source_size());
  const std::size_t n = grid.size();
  const double h = grid.step();
  DilatedSet out;
  out.cells.assign(n, false);
  for (const auto& iv : family.intervals()) {
    // Work in cell units measured from -pi.
    const double a = (iv.start + kPi) / h;
    const double len = iv.length / h;
    const double mid = a + 0.5 * len;
    const double lo = mid - 0.5 * factor * len;
    const double hi = mid + 0.5 * factor * len;
    if (hi - lo >= static_cast<double>(n)) {
      out.cells.assign(n, true);
      break;
    }
    const auto first = static_cast<long>(std::ceil(lo - 1e-9));
    const auto last = static_cast<long>(std::floor(hi + 1e-9));
    const auto nn = static_cast<long>(n);
    for (long j = first; j < last; ++j) out.cells[static_cast<std::size_t>(((j % nn) + nn) % nn)] = true;
  }
  std::size_t count = 0;
  for (bool c : out.cells) count += c ? 1 : 0;
  out.measure = static_cast<double>(count) * h;
  return out;
}

CzdCheck check_decomposition(const SampledFunction1D& f, const IntervalFamily& family) {
  const std::size_t n = f.size();
  const double h = f.grid().step();
  const double t = std::sqrt(family.level());
  CzdCheck check;
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto& iv = family.intervals()[k];
    const double a = (iv.start + kPi) / h;
    const double cells = iv.length / h;
    const auto first = static_cast<std::size_t>(std::llround(a));
    const auto width = static_cast<std::size_t>(std::llround(cells));
    if (std::abs(a - static_cast<double>(first)) > 1e-9 || std::abs(cells - static_cast<double>(width)) > 1e-9 ||
        width == 0 || (width & (width - 1)) != 0 || first % width != 0 || first + width > n) {
      check.dyadic = false;
      continue;
    }
    double s = 0.0;
    for (std::size_t j = first; j < first + width; ++j) {
      if (owner[j] != -1) check.disjoint = false;
      owner[j] = static_cast<int>(k);
      s += std::abs(f[j]);
    }
    const double avg = s / static_cast<double>(width);
    if (!(avg > t && avg <= 2.0 * t)) ++check.average_violations;
  }
  check.total_length = family.total_length();
  check.measure_bound = l1_norm(f) / t;
  // Any dyadic interval not inside a selected one must have average <= t.
  for (std::size_t width = n; width >= 1; width /= 2) {
    for (std::size_t first = 0; first < n; first += width) {
      bool inside = owner[first] != -1;
      for (std::size_t j = first; inside && j < first + width; ++j) inside = owner[j] == owner[first];
      if (inside) continue;
      double s = 0.0;
      for (std::size_t j = first; j < first + width; ++j) s += std::abs(f[j]);
      if (s / static_cast<double>(width) > t) ++check.outside_violations;
    }
  }
  return check;
}

}  // namespace summa
