#pragma once

// Data-parallel inner loops shared by the means, operators and spectrum modules.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime. Reductions use a fixed four-lane blocked order
// in both variants, so scalar and SIMD results are bit-identical.

#include <cstddef>
#include <span>
#include <string_view>

namespace summa::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b) noexcept;

/// True when the CPU and the build both support the backend.
bool available(Backend b) noexcept;

/// Chosen on first use: AVX2 when available unless SUMMA_SIMD=scalar is set.
Backend active_backend() noexcept;

/// Throws InvalidArgument when the backend is not available.
void set_backend(Backend b);

/// out[i] = |in[i] - center|
void abs_diff(std::span<const double> in, double center, std::span<double> out);

/// sum of x[i]
double sum(std::span<const double> x);

/// sum of x[i]^2
double sum_squares(std::span<const double> x);

/// max of x[i]; -inf for an empty span.
double max_value(std::span<const double> x);

/// number of i with x[i] > threshold
std::size_t count_greater(std::span<const double> x, double threshold);

/// out[i] = prev[i] + (a[i] + b[i])
void add_pair(std::span<const double> prev, std::span<const double> a,
              std::span<const double> b, std::span<double> out);

/// out[i] = len[i] / (d_i + len[i]) with d_i the arc distance from x to center[i].
/// x and every center must lie in [-pi, pi).
void oskolkov_ratios(std::span<const double> center, std::span<const double> len, double x,
                     std::span<double> out);

/// Backend-explicit entry points, used by the equivalence tests.
namespace scalar {
void abs_diff(std::span<const double> in, double center, std::span<double> out);
double sum(std::span<const double> x);
double sum_squares(std::span<const double> x);
double max_value(std::span<const double> x);
std::size_t count_greater(std::span<const double> x, double threshold);
void add_pair(std::span<const double> prev, std::span<const double> a,
              std::span<const double> b, std::span<double> out);
void oskolkov_ratios(std::span<const double> center, std::span<const double> len, double x,
                     std::span<double> out);
}  // namespace scalar

namespace avx2 {
void abs_diff(std::span<const double> in, double center, std::span<double> out);
double sum(std::span<const double> x);
double sum_squares(std::span<const double> x);
double max_value(std::span<const double> x);
std::size_t count_greater(std::span<const double> x, double threshold);
void add_pair(std::span<const double> prev, std::span<const double> a,
              std::span<const double> b, std::span<double> out);
void oskolkov_ratios(std::span<const double> center, std::span<const double> len, double x,
                     std::span<double> out);
}  // namespace avx2

}  // namespace summa::kernels
