#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "summa/error.hpp"
#include "summa/grid.hpp"

// Fails unless `expr` throws summa::Error carrying `code`.
#define EXPECT_SUMMA_ERROR(expr, expected_code)                                   \
  do {                                                                            \
    try {                                                                         \
      (void)(expr);                                                               \
      ADD_FAILURE() << #expr " did not throw";                                    \
    } catch (const ::summa::Error& e_) {                                          \
      EXPECT_EQ(e_.code(), (expected_code)) << e_.what();                         \
    }                                                                             \
  } while (0)

namespace summa::testing {

// Owning copy, safe to iterate when f is a temporary.
template <typename F>
std::vector<double> copy_values(const F& f) {
  return {f.values().begin(), f.values().end()};
}

inline std::vector<double> random_values(std::size_t n, std::uint64_t seed, double lo = -1.0,
                                         double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

inline SampledFunction1D random_function_1d(std::size_t n, std::uint64_t seed, double lo = -1.0,
                                            double hi = 1.0) {
  return SampledFunction1D(PeriodicGrid(n), random_values(n, seed, lo, hi));
}

inline SampledFunction2D random_function_2d(std::size_t n1, std::size_t n2, std::uint64_t seed) {
  return SampledFunction2D(PeriodicGrid(n1), PeriodicGrid(n2), random_values(n1 * n2, seed));
}

// Direct O(N^2) quadrature (1/N) sum f(x_j) e^{-i m x_j}.
inline std::complex<double> direct_coefficient(const SampledFunction1D& f, int m) {
  std::complex<double> s = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = f.grid().point(j);
    s += f[j] * std::polar(1.0, -m * x);
  }
  return s / static_cast<double>(f.size());
}

inline std::complex<double> direct_coefficient(const SampledFunction2D& f, int m1, int m2) {
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < f.grid1().size(); ++i)
    for (std::size_t j = 0; j < f.grid2().size(); ++j)
      s += f(i, j) * std::polar(1.0, -(m1 * f.grid1().point(i) + m2 * f.grid2().point(j)));
  return s / static_cast<double>(f.grid1().size() * f.grid2().size());
}

}  // namespace summa::testing
