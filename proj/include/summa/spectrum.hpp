#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "summa/grid.hpp"

namespace summa {

using Complex = std::complex<double>;

/// Coefficients c_m for |m| <= max_frequency of a 1D function.
class FourierSpectrum1D {
 public:
  /// coeffs[m + max_frequency], m = -max_frequency..max_frequency.
  FourierSpectrum1D(std::size_t source_size, std::vector<Complex> coeffs);

  std::size_t source_size() const noexcept { return source_size_; }
  int max_frequency() const noexcept { return max_freq_; }
  /// Throws FrequencyOutOfRange for |m| > max_frequency.
  Complex operator()(int m) const;
  Complex coefficient_unchecked(int m) const noexcept { return coeffs_[static_cast<std::size_t>(m + max_freq_)]; }
  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }

 private:
  std::size_t source_size_;
  int max_freq_;
  std::vector<Complex> coeffs_;
};

/// Coefficients c_{m1 m2}; m1 is the x1 frequency. Row-major by m1.
class FourierSpectrum2D {
 public:
  FourierSpectrum2D(std::size_t source_size1, std::size_t source_size2, std::vector<Complex> coeffs);

  std::size_t source_size1() const noexcept { return n1_; }
  std::size_t source_size2() const noexcept { return n2_; }
  int max_frequency1() const noexcept { return m1_; }
  int max_frequency2() const noexcept { return m2_; }
  Complex operator()(int m1, int m2) const;
  Complex coefficient_unchecked(int m1, int m2) const noexcept {
    return coeffs_[static_cast<std::size_t>(m1 + m1_) * static_cast<std::size_t>(2 * m2_ + 1) +
                   static_cast<std::size_t>(m2 + m2_)];
  }
  const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }

 private:
  std::size_t n1_, n2_;
  int m1_, m2_;
  std::vector<Complex> coeffs_;
};

/// All rectangular partial sums P(i, j) = S_ij(x1, x2) at one grid point,
/// 0 <= i <= rows()-1, 0 <= j <= cols()-1. A 1D field has one column.
class PrefixField {
 public:
  PrefixField(std::size_t rows, std::size_t cols, std::vector<double> values, double x1, double x2,
              double max_imag_residue);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }
  /// Row i, columns [0, cols).
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(values_).subspan(i * cols_, cols_);
  }
  double x1() const noexcept { return x1_; }
  double x2() const noexcept { return x2_; }
  /// Largest |Im P(i, j)| observed before the imaginary parts were discarded.
  double max_imag_residue() const noexcept { return max_imag_residue_; }

 private:
  std::size_t rows_, cols_;
  std::vector<double> values_;
  double x1_, x2_;
  double max_imag_residue_;
};

/// Relative imaginary residue allowed before synthesis results are rejected.
inline constexpr double kImagResidueTolerance = 1e-8;

FourierSpectrum1D analyze_1d(const SampledFunction1D& f);
FourierSpectrum2D analyze_2d(const SampledFunction2D& f);

/// S_n sampled on grid.
SampledFunction1D partial_sum_1d(const FourierSpectrum1D& spec, int n, const PeriodicGrid& grid);

/// S_{MN} sampled on grid1 x grid2.
SampledFunction2D rect_partial_sum(const FourierSpectrum2D& spec, int m, int n,
                                   const PeriodicGrid& grid1, const PeriodicGrid& grid2);

/// sigma_n = (1/(n+1)) sum_{k<=n} S_k.
SampledFunction1D fejer_mean_1d(const FourierSpectrum1D& spec, int n, const PeriodicGrid& grid);

/// (1/nm) sum_{i<n} sum_{j<m} S_ij, for 1 <= n <= M1+1, 1 <= m <= M2+1.
SampledFunction2D cesaro_11_mean(const FourierSpectrum2D& spec, int n, int m,
                                 const PeriodicGrid& grid1, const PeriodicGrid& grid2);

/// Synthesis of c_m * weight[|m|] for |m| <= weights.size()-1. Used by the
/// partial-sum family and exposed for oracles that need other kernels.
SampledFunction1D synthesize_1d(const FourierSpectrum1D& spec, const std::vector<double>& weights,
                                const PeriodicGrid& grid);
SampledFunction2D synthesize_2d(const FourierSpectrum2D& spec, const std::vector<double>& weights1,
                                const std::vector<double>& weights2, const PeriodicGrid& grid1,
                                const PeriodicGrid& grid2);

/// Field of S_ij at the source-grid point (x1, x2). Throws NotAGridPoint.
PrefixField prefix_field_at_point(const FourierSpectrum2D& spec, double x1, double x2);
PrefixField prefix_field_at_index(const FourierSpectrum2D& spec, std::size_t i1, std::size_t i2);

/// One-column field of S_i(x) at a source-grid point.
PrefixField prefix_field_1d(const FourierSpectrum1D& spec, double x);
PrefixField prefix_field_1d_at_index(const FourierSpectrum1D& spec, std::size_t j);

}  // namespace summa
