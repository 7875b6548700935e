#include <atomic>
#include <cstdlib>
#include <cstring>

#include "summa/error.hpp"
#include "summa/kernels.hpp"

namespace summa::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(SUMMA_HAVE_AVX2) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  const char* env = std::getenv("SUMMA_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

bool use_avx2() noexcept { return current().load(std::memory_order_relaxed) == Backend::Avx2; }

}  // namespace

std::string_view to_string(Backend b) noexcept {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool available(Backend b) noexcept { return b == Backend::Scalar || cpu_has_avx2(); }

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!available(b)) fail(ErrorCode::InvalidArgument, "SIMD backend not available on this CPU");
  current().store(b, std::memory_order_relaxed);
}

void abs_diff(std::span<const double> in, double center, std::span<double> out) {
  use_avx2() ? avx2::abs_diff(in, center, out) : scalar::abs_diff(in, center, out);
}

double sum(std::span<const double> x) { return use_avx2() ? avx2::sum(x) : scalar::sum(x); }

double sum_squares(std::span<const double> x) {
  return use_avx2() ? avx2::sum_squares(x) : scalar::sum_squares(x);
}

double max_value(std::span<const double> x) {
  return use_avx2() ? avx2::max_value(x) : scalar::max_value(x);
}

std::size_t count_greater(std::span<const double> x, double threshold) {
  return use_avx2() ? avx2::count_greater(x, threshold) : scalar::count_greater(x, threshold);
}

void add_pair(std::span<const double> prev, std::span<const double> a,
              std::span<const double> b, std::span<double> out) {
  use_avx2() ? avx2::add_pair(prev, a, b, out) : scalar::add_pair(prev, a, b, out);
}

void oskolkov_ratios(std::span<const double> center, std::span<const double> len, double x,
                     std::span<double> out) {
  use_avx2() ? avx2::oskolkov_ratios(center, len, x, out)
             : scalar::oskolkov_ratios(center, len, x, out);
}

}  // namespace summa::kernels
