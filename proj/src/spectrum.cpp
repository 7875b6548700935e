#include "summa/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fft.hpp"
#include "summa/error.hpp"
#include "summa/kernels.hpp"

namespace summa {

namespace {

using detail::FftDirection;

std::size_t wrap(int m, std::size_t n) {
  const auto nn = static_cast<long>(n);
  return static_cast<std::size_t>(((m % nn) + nn) % nn);
}

double parity(int m) { return (m & 1) ? -1.0 : 1.0; }

[[noreturn]] void out_of_range(int m, int limit) {
  fail(ErrorCode::FrequencyOutOfRange,
       "frequency " + std::to_string(m) + " exceeds resolved limit " + std::to_string(limit));
}

void check_residue(double max_imag, double scale) {
  const double bound = kImagResidueTolerance * std::max(scale, std::numeric_limits<double>::min());
  if (max_imag > bound) {
    fail(ErrorCode::ImaginaryResidue, "imaginary residue " + std::to_string(max_imag) +
                                          " exceeds tolerance relative to " + std::to_string(scale));
  }
}

// exp(i m x_j) on a grid of size n, evaluated from the exact root table so that
// it carries no accumulated phase error.
class PhaseTable {
 public:
  explicit PhaseTable(std::size_t n) : n_(n), roots_(n) {
    for (std::size_t k = 0; k < n; ++k) {
      const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
      roots_[k] = Complex(std::cos(t), std::sin(t));
    }
  }
  Complex operator()(int m, std::size_t j) const {
    const std::size_t k = (wrap(m, n_) * j) % n_;
    return parity(m) * roots_[k];
  }

 private:
  std::size_t n_;
  std::vector<Complex> roots_;
};

}  // namespace

FourierSpectrum1D::FourierSpectrum1D(std::size_t source_size, std::vector<Complex> coeffs)
    : source_size_(source_size), max_freq_(static_cast<int>(coeffs.size() / 2)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 != 1) fail(ErrorCode::InvalidArgument, "coefficient count must be odd");
}

Complex FourierSpectrum1D::operator()(int m) const {
  if (std::abs(m) > max_freq_) out_of_range(m, max_freq_);
  return coefficient_unchecked(m);
}

FourierSpectrum2D::FourierSpectrum2D(std::size_t source_size1, std::size_t source_size2,
                                     std::vector<Complex> coeffs)
    : n1_(source_size1),
      n2_(source_size2),
      m1_(static_cast<int>(PeriodicGrid(source_size1).max_frequency())),
      m2_(static_cast<int>(PeriodicGrid(source_size2).max_frequency())),
      coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>((2 * m1_ + 1) * (2 * m2_ + 1))) {
    fail(ErrorCode::InvalidArgument, "coefficient matrix has the wrong shape");
  }
}

Complex FourierSpectrum2D::operator()(int m1, int m2) const {
  if (std::abs(m1) > m1_) out_of_range(m1, m1_);
  if (std::abs(m2) > m2_) out_of_range(m2, m2_);
  return coefficient_unchecked(m1, m2);
}

PrefixField::PrefixField(std::size_t rows, std::size_t cols, std::vector<double> values, double x1,
                         double x2, double max_imag_residue)
    : rows_(rows), cols_(cols), values_(std::move(values)), x1_(x1), x2_(x2),
      max_imag_residue_(max_imag_residue) {
  if (values_.size() != rows_ * cols_) fail(ErrorCode::InvalidArgument, "prefix field shape mismatch");
}

FourierSpectrum1D analyze_1d(const SampledFunction1D& f) {
  const std::size_t n = f.size();
  const int mmax = static_cast<int>(f.grid().max_frequency());
  std::vector<Complex> in(f.values().begin(), f.values().end());
  const auto out = detail::fft_1d(in, FftDirection::Forward);
  std::vector<Complex> c(static_cast<std::size_t>(2 * mmax + 1));
  const double scale = 1.0 / static_cast<double>(n);
  for (int m = -mmax; m <= mmax; ++m) {
    c[static_cast<std::size_t>(m + mmax)] = parity(m) * scale * out[wrap(m, n)];
  }
  return FourierSpectrum1D(n, std::move(c));
}

FourierSpectrum2D analyze_2d(const SampledFunction2D& f) {
  const std::size_t n1 = f.grid1().size();
  const std::size_t n2 = f.grid2().size();
  const int m1 = static_cast<int>(f.grid1().max_frequency());
  const int m2 = static_cast<int>(f.grid2().max_frequency());
  std::vector<Complex> in(f.values().begin(), f.values().end());
  const auto out = detail::fft_2d(in, n1, n2, FftDirection::Forward);
  const std::size_t width = static_cast<std::size_t>(2 * m2 + 1);
  std::vector<Complex> c(static_cast<std::size_t>(2 * m1 + 1) * width);
  const double scale = 1.0 / (static_cast<double>(n1) * static_cast<double>(n2));
  for (int a = -m1; a <= m1; ++a) {
    for (int b = -m2; b <= m2; ++b) {
      c[static_cast<std::size_t>(a + m1) * width + static_cast<std::size_t>(b + m2)] =
          parity(a + b) * scale * out[wrap(a, n1) * n2 + wrap(b, n2)];
    }
  }
  return FourierSpectrum2D(n1, n2, std::move(c));
}

SampledFunction1D synthesize_1d(const FourierSpectrum1D& spec, const std::vector<double>& weights,
                                const PeriodicGrid& grid) {
  const int k = static_cast<int>(weights.size()) - 1;
  if (k < 0) fail(ErrorCode::InvalidArgument, "empty weight vector");
  if (k > spec.max_frequency()) out_of_range(k, spec.max_frequency());
  const std::size_t n = grid.size();

  std::vector<Complex> terms(static_cast<std::size_t>(2 * k + 1));
  double scale = 0.0;
  for (int m = -k; m <= k; ++m) {
    const Complex t = spec.coefficient_unchecked(m) * weights[static_cast<std::size_t>(std::abs(m))];
    terms[static_cast<std::size_t>(m + k)] = t;
    scale += std::abs(t);
  }

  std::vector<Complex> values(n);
  if (static_cast<std::size_t>(2 * k + 1) <= n) {
    std::vector<Complex> buf(n);
    for (int m = -k; m <= k; ++m) buf[wrap(m, n)] += parity(m) * terms[static_cast<std::size_t>(m + k)];
    values = detail::fft_1d(buf, FftDirection::Backward);
  } else {
    const PhaseTable phase(n);
    for (std::size_t j = 0; j < n; ++j)
      for (int m = -k; m <= k; ++m) values[j] += terms[static_cast<std::size_t>(m + k)] * phase(m, j);
  }

  std::vector<double> re(n);
  double max_imag = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = values[j].real();
    max_imag = std::max(max_imag, std::abs(values[j].imag()));
  }
  check_residue(max_imag, scale);
  return SampledFunction1D(grid, std::move(re));
}

SampledFunction2D synthesize_2d(const FourierSpectrum2D& spec, const std::vector<double>& weights1,
                                const std::vector<double>& weights2, const PeriodicGrid& grid1,
                                const PeriodicGrid& grid2) {
  const int k1 = static_cast<int>(weights1.size()) - 1;
  const int k2 = static_cast<int>(weights2.size()) - 1;
  if (k1 < 0 || k2 < 0) fail(ErrorCode::InvalidArgument, "empty weight vector");
  if (k1 > spec.max_frequency1()) out_of_range(k1, spec.max_frequency1());
  if (k2 > spec.max_frequency2()) out_of_range(k2, spec.max_frequency2());
  const std::size_t n1 = grid1.size();
  const std::size_t n2 = grid2.size();

  double scale = 0.0;
  std::vector<Complex> values(n1 * n2);
  const bool fits = static_cast<std::size_t>(2 * k1 + 1) <= n1 && static_cast<std::size_t>(2 * k2 + 1) <= n2;
  std::vector<Complex> buf(fits ? n1 * n2 : 0);
  std::vector<Complex> terms;
  if (!fits) terms.resize(static_cast<std::size_t>((2 * k1 + 1) * (2 * k2 + 1)));
  for (int a = -k1; a <= k1; ++a) {
    for (int b = -k2; b <= k2; ++b) {
      const Complex t = spec.coefficient_unchecked(a, b) * weights1[static_cast<std::size_t>(std::abs(a))] *
                        weights2[static_cast<std::size_t>(std::abs(b))];
      scale += std::abs(t);
      if (fits) {
        buf[wrap(a, n1) * n2 + wrap(b, n2)] += parity(a + b) * t;
      } else {
        terms[static_cast<std::size_t>((a + k1) * (2 * k2 + 1) + (b + k2))] = t;
      }
    }
  }
  if (fits) {
    values = detail::fft_2d(buf, n1, n2, FftDirection::Backward);
  } else {
    const PhaseTable p1(n1), p2(n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j)
        for (int a = -k1; a <= k1; ++a)
          for (int b = -k2; b <= k2; ++b)
            values[i * n2 + j] += terms[static_cast<std::size_t>((a + k1) * (2 * k2 + 1) + (b + k2))] *
                                  p1(a, i) * p2(b, j);
  }

  std::vector<double> re(n1 * n2);
  double max_imag = 0.0;
  for (std::size_t i = 0; i < re.size(); ++i) {
    re[i] = values[i].real();
    max_imag = std::max(max_imag, std::abs(values[i].imag()));
  }
  check_residue(max_imag, scale);
  return SampledFunction2D(grid1, grid2, std::move(re));
}

SampledFunction1D partial_sum_1d(const FourierSpectrum1D& spec, int n, const PeriodicGrid& grid) {
  if (n < 0) out_of_range(n, spec.max_frequency());
  return synthesize_1d(spec, std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0), grid);
}

SampledFunction2D rect_partial_sum(const FourierSpectrum2D& spec, int m, int n,
                                   const PeriodicGrid& grid1, const PeriodicGrid& grid2) {
  if (m < 0) out_of_range(m, spec.max_frequency1());
  if (n < 0) out_of_range(n, spec.max_frequency2());
  return synthesize_2d(spec, std::vector<double>(static_cast<std::size_t>(m) + 1, 1.0),
                       std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0), grid1, grid2);
}

namespace {

std::vector<double> fejer_weights(int count) {
  // weights (1 - k/count) for k < count
  std::vector<double> w(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) w[static_cast<std::size_t>(k)] = 1.0 - static_cast<double>(k) / count;
  return w;
}

}  // namespace

SampledFunction1D fejer_mean_1d(const FourierSpectrum1D& spec, int n, const PeriodicGrid& grid) {
  if (n < 0) out_of_range(n, spec.max_frequency());
  return synthesize_1d(spec, fejer_weights(n + 1), grid);
}

SampledFunction2D cesaro_11_mean(const FourierSpectrum2D& spec, int n, int m,
                                 const PeriodicGrid& grid1, const PeriodicGrid& grid2) {
  if (n < 1 || n > spec.max_frequency1() + 1) out_of_range(n - 1, spec.max_frequency1());
  if (m < 1 || m > spec.max_frequency2() + 1) out_of_range(m - 1, spec.max_frequency2());
  return synthesize_2d(spec, fejer_weights(n), fejer_weights(m), grid1, grid2);
}

PrefixField prefix_field_at_index(const FourierSpectrum2D& spec, std::size_t i1, std::size_t i2) {
  const PeriodicGrid g1(spec.source_size1());
  const PeriodicGrid g2(spec.source_size2());
  if (i1 >= g1.size() || i2 >= g2.size()) fail(ErrorCode::NotAGridPoint, "grid index out of range");
  const int m1 = spec.max_frequency1();
  const int m2 = spec.max_frequency2();
  const std::size_t w1 = static_cast<std::size_t>(2 * m1 + 1);
  const std::size_t w2 = static_cast<std::size_t>(2 * m2 + 1);
  const PhaseTable p1(g1.size()), p2(g2.size());

  // Shifted coefficients a = c e^{i(m1 x1 + m2 x2)}, stored transposed
  // (x2 frequency major) so that the first prefix pass runs over contiguous x1 rows.
  std::vector<double> at_re(w2 * w1), at_im(w2 * w1);
  double scale = 0.0;
  for (int a = -m1; a <= m1; ++a) {
    const Complex e1 = p1(a, i1);
    for (int b = -m2; b <= m2; ++b) {
      const Complex t = spec.coefficient_unchecked(a, b) * e1 * p2(b, i2);
      const std::size_t k = static_cast<std::size_t>(b + m2) * w1 + static_cast<std::size_t>(a + m1);
      at_re[k] = t.real();
      at_im[k] = t.imag();
      scale += std::abs(t);
    }
  }
  auto trow = [&](std::vector<double>& v, int b) {
    return std::span<double>(v).subspan(static_cast<std::size_t>(b + m2) * w1, w1);
  };

  // Q(a, j) = sum_{|b| <= j} a(a, b), built column by column: qt[j] is a row over a.
  const std::size_t cols = static_cast<std::size_t>(m2) + 1;
  std::vector<double> qt_re(cols * w1), qt_im(cols * w1);
  auto qrow = [&](std::vector<double>& v, std::size_t j) { return std::span<double>(v).subspan(j * w1, w1); };
  std::ranges::copy(trow(at_re, 0), qrow(qt_re, 0).begin());
  std::ranges::copy(trow(at_im, 0), qrow(qt_im, 0).begin());
  for (int j = 1; j <= m2; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    kernels::add_pair(qrow(qt_re, uj - 1), trow(at_re, j), trow(at_re, -j), qrow(qt_re, uj));
    kernels::add_pair(qrow(qt_im, uj - 1), trow(at_im, j), trow(at_im, -j), qrow(qt_im, uj));
  }

  // Transpose to Q rows over j, then P(i, .) = P(i-1, .) + Q(i, .) + Q(-i, .).
  std::vector<double> q_re(w1 * cols), q_im(w1 * cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t a = 0; a < w1; ++a) {
      q_re[a * cols + j] = qt_re[j * w1 + a];
      q_im[a * cols + j] = qt_im[j * w1 + a];
    }
  auto qr = [&](std::vector<double>& v, int a) {
    return std::span<double>(v).subspan(static_cast<std::size_t>(a + m1) * cols, cols);
  };
  const std::size_t rows = static_cast<std::size_t>(m1) + 1;
  std::vector<double> p_re(rows * cols), p_im(rows * cols);
  auto prow = [&](std::vector<double>& v, std::size_t i) { return std::span<double>(v).subspan(i * cols, cols); };
  std::ranges::copy(qr(q_re, 0), prow(p_re, 0).begin());
  std::ranges::copy(qr(q_im, 0), prow(p_im, 0).begin());
  for (int i = 1; i <= m1; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    kernels::add_pair(prow(p_re, ui - 1), qr(q_re, i), qr(q_re, -i), prow(p_re, ui));
    kernels::add_pair(prow(p_im, ui - 1), qr(q_im, i), qr(q_im, -i), prow(p_im, ui));
  }

  double max_imag = 0.0;
  for (double v : p_im) max_imag = std::max(max_imag, std::abs(v));
  check_residue(max_imag, scale);
  return PrefixField(rows, cols, std::move(p_re), g1.point(i1), g2.point(i2), max_imag);
}

PrefixField prefix_field_at_point(const FourierSpectrum2D& spec, double x1, double x2) {
  const PeriodicGrid g1(spec.source_size1());
  const PeriodicGrid g2(spec.source_size2());
  return prefix_field_at_index(spec, g1.index_of(x1), g2.index_of(x2));
}

PrefixField prefix_field_1d_at_index(const FourierSpectrum1D& spec, std::size_t j) {
  const PeriodicGrid g(spec.source_size());
  if (j >= g.size()) fail(ErrorCode::NotAGridPoint, "grid index out of range");
  const PhaseTable phase(g.size());
  const int mmax = spec.max_frequency();
  std::vector<double> p(static_cast<std::size_t>(mmax) + 1);
  Complex acc = spec.coefficient_unchecked(0);
  double scale = std::abs(acc);
  double max_imag = std::abs(acc.imag());
  p[0] = acc.real();
  for (int m = 1; m <= mmax; ++m) {
    const Complex plus = spec.coefficient_unchecked(m) * phase(m, j);
    const Complex minus = spec.coefficient_unchecked(-m) * phase(-m, j);
    acc += plus + minus;
    scale += std::abs(plus) + std::abs(minus);
    p[static_cast<std::size_t>(m)] = acc.real();
    max_imag = std::max(max_imag, std::abs(acc.imag()));
  }
  check_residue(max_imag, scale);
  const std::size_t rows = p.size();
  return PrefixField(rows, 1, std::move(p), g.point(j), 0.0, max_imag);
}

PrefixField prefix_field_1d(const FourierSpectrum1D& spec, double x) {
  return prefix_field_1d_at_index(spec, PeriodicGrid(spec.source_size()).index_of(x));
}

}  // namespace summa
