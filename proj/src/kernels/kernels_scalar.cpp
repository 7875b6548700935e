#include <cmath>

#include "summa/grid.hpp"
#include "summa/kernels.hpp"

namespace summa::kernels::scalar {

void abs_diff(std::span<const double> in, double center, std::span<double> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = std::abs(in[i] - center);
}

double sum(std::span<const double> x) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t blocked = x.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4)
    for (std::size_t k = 0; k < 4; ++k) acc[k] += x[i + k];
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t i = blocked; i < x.size(); ++i) total += x[i];
  return total;
}

double sum_squares(std::span<const double> x) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t blocked = x.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4)
    for (std::size_t k = 0; k < 4; ++k) acc[k] += x[i + k] * x[i + k];
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t i = blocked; i < x.size(); ++i) total += x[i] * x[i];
  return total;
}

double max_value(std::span<const double> x) {
  double m = -INFINITY;
  for (double v : x) m = m > v ? m : v;
  return m;
}

std::size_t count_greater(std::span<const double> x, double threshold) {
  std::size_t c = 0;
  for (double v : x) c += v > threshold ? 1 : 0;
  return c;
}

void add_pair(std::span<const double> prev, std::span<const double> a,
              std::span<const double> b, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = prev[i] + (a[i] + b[i]);
}

void oskolkov_ratios(std::span<const double> center, std::span<const double> len, double x,
                     std::span<double> out) {
  for (std::size_t i = 0; i < center.size(); ++i) {
    double d = std::abs(x - center[i]);
    const double wrapped = kTwoPi - d;
    d = wrapped < d ? wrapped : d;
    out[i] = len[i] / (d + len[i]);
  }
}

}  // namespace summa::kernels::scalar
