#pragma once

// Thin wrapper over FFTW. Plans are cached per shape and created under a lock
// (the FFTW planner is not thread-safe); execution is lock-free.

#include <complex>
#include <cstddef>
#include <vector>

namespace summa::detail {

enum class FftDirection { Forward, Backward };

/// Unnormalized DFT: out_k = sum_j in_j exp(-+2 pi i jk / n).
std::vector<std::complex<double>> fft_1d(const std::vector<std::complex<double>>& in,
                                         FftDirection dir);

/// Row-major n1 x n2 unnormalized 2D DFT.
std::vector<std::complex<double>> fft_2d(const std::vector<std::complex<double>>& in,
                                         std::size_t n1, std::size_t n2, FftDirection dir);

}  // namespace summa::detail
