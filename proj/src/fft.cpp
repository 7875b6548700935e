#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace summa::detail {

namespace {

using PlanKey = std::tuple<std::size_t, std::size_t, int>;

fftw_plan plan_for(std::size_t n1, std::size_t n2, int sign) {
  static std::mutex mutex;
  static std::map<PlanKey, fftw_plan> cache;
  std::lock_guard lock(mutex);
  const PlanKey key{n1, n2, sign};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // FFTW_ESTIMATE leaves the scratch arrays untouched; FFTW_UNALIGNED keeps
  // results independent of the alignment of the arrays passed at execution.
  std::vector<std::complex<double>> a(n1 * n2), b(n1 * n2);
  auto* in = reinterpret_cast<fftw_complex*>(a.data());
  auto* out = reinterpret_cast<fftw_complex*>(b.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  fftw_plan p = n2 == 0 ? fftw_plan_dft_1d(static_cast<int>(n1), in, out, sign, flags)
                        : fftw_plan_dft_2d(static_cast<int>(n1), static_cast<int>(n2), in, out,
                                           sign, flags);
  cache.emplace(key, p);
  return p;
}

int sign_of(FftDirection dir) { return dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD; }

}  // namespace

std::vector<std::complex<double>> fft_1d(const std::vector<std::complex<double>>& in,
                                         FftDirection dir) {
  std::vector<std::complex<double>> src(in);
  std::vector<std::complex<double>> out(in.size());
  fftw_execute_dft(plan_for(in.size(), 0, sign_of(dir)),
                   reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

std::vector<std::complex<double>> fft_2d(const std::vector<std::complex<double>>& in,
                                         std::size_t n1, std::size_t n2, FftDirection dir) {
  std::vector<std::complex<double>> src(in);
  std::vector<std::complex<double>> out(in.size());
  fftw_execute_dft(plan_for(n1, n2, sign_of(dir)), reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace summa::detail
