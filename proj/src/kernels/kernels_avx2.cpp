// Compiled with -mavx2 on x86-64; only reached after a runtime CPU check.

#include "summa/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)

#include <immintrin.h>

#include <bit>
#include <cmath>

#include "summa/grid.hpp"

namespace summa::kernels::avx2 {

namespace {

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double combine(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

void abs_diff(std::span<const double> in, double center, std::span<double> out) {
  const __m256d c = _mm256_set1_pd(center);
  const std::size_t blocked = in.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    _mm256_storeu_pd(out.data() + i, abs_pd(_mm256_sub_pd(_mm256_loadu_pd(in.data() + i), c)));
  }
  for (std::size_t i = blocked; i < in.size(); ++i) out[i] = std::abs(in[i] - center);
}

double sum(std::span<const double> x) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t blocked = x.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x.data() + i));
  double total = combine(acc);
  for (std::size_t i = blocked; i < x.size(); ++i) total += x[i];
  return total;
}

double sum_squares(std::span<const double> x) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t blocked = x.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d v = _mm256_loadu_pd(x.data() + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double total = combine(acc);
  for (std::size_t i = blocked; i < x.size(); ++i) total += x[i] * x[i];
  return total;
}

double max_value(std::span<const double> x) {
  __m256d acc = _mm256_set1_pd(-INFINITY);
  const std::size_t blocked = x.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) acc = _mm256_max_pd(_mm256_loadu_pd(x.data() + i), acc);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double m = -INFINITY;
  for (double v : lanes) m = m > v ? m : v;
  for (std::size_t i = blocked; i < x.size(); ++i) m = m > x[i] ? m : x[i];
  return m;
}

std::size_t count_greater(std::span<const double> x, double threshold) {
  const __m256d t = _mm256_set1_pd(threshold);
  std::size_t c = 0;
  const std::size_t blocked = x.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d gt = _mm256_cmp_pd(_mm256_loadu_pd(x.data() + i), t, _CMP_GT_OQ);
    c += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(_mm256_movemask_pd(gt))));
  }
  for (std::size_t i = blocked; i < x.size(); ++i) c += x[i] > threshold ? 1 : 0;
  return c;
}

void add_pair(std::span<const double> prev, std::span<const double> a,
              std::span<const double> b, std::span<double> out) {
  const std::size_t blocked = out.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d ab = _mm256_add_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_loadu_pd(prev.data() + i), ab));
  }
  for (std::size_t i = blocked; i < out.size(); ++i) out[i] = prev[i] + (a[i] + b[i]);
}

void oskolkov_ratios(std::span<const double> center, std::span<const double> len, double x,
                     std::span<double> out) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d two_pi = _mm256_set1_pd(kTwoPi);
  const std::size_t blocked = center.size() & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    __m256d d = abs_pd(_mm256_sub_pd(vx, _mm256_loadu_pd(center.data() + i)));
    d = _mm256_min_pd(_mm256_sub_pd(two_pi, d), d);
    const __m256d l = _mm256_loadu_pd(len.data() + i);
    _mm256_storeu_pd(out.data() + i, _mm256_div_pd(l, _mm256_add_pd(d, l)));
  }
  for (std::size_t i = blocked; i < center.size(); ++i) {
    double d = std::abs(x - center[i]);
    const double wrapped = kTwoPi - d;
    d = wrapped < d ? wrapped : d;
    out[i] = len[i] / (d + len[i]);
  }
}

}  // namespace summa::kernels::avx2

#else

#include "summa/error.hpp"

namespace summa::kernels::avx2 {

namespace {
[[noreturn]] void unavailable() { fail(ErrorCode::InvalidArgument, "AVX2 kernels not built"); }
}  // namespace

void abs_diff(std::span<const double>, double, std::span<double>) { unavailable(); }
double sum(std::span<const double>) { unavailable(); }
double sum_squares(std::span<const double>) { unavailable(); }
double max_value(std::span<const double>) { unavailable(); }
std::size_t count_greater(std::span<const double>, double) { unavailable(); }
void add_pair(std::span<const double>, std::span<const double>, std::span<const double>,
              std::span<double>) {
  unavailable();
}
void oskolkov_ratios(std::span<const double>, std::span<const double>, double,
                     std::span<double>) {
  unavailable();
}

}  // namespace summa::kernels::avx2

#endif
