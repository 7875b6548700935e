#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "summa/grid.hpp"

namespace summa {

/// Analytic membership facts about a corpus entry. Never inferred from samples.
struct CorpusTags {
  bool continuous = false;
  bool trig_poly = false;
  int degree1 = -1;  ///< x1 degree when trig_poly
  int degree2 = -1;  ///< x2 degree when trig_poly (2D only)
  bool llogl = false;
  bool l1_only = false;
};

struct CorpusInfo {
  std::string name;
  int dims = 1;
  CorpusTags tags;
  /// Empty for closed-form entries.
  std::string clipping;
  /// Coordinates of point singularities along each axis (x1 for 1D entries).
  std::optional<double> singular_x1;
  std::optional<double> singular_x2;
};

/// a0 + sum_k a_k cos(kx) + b_k sin(kx), k = 1..degree.
struct TrigPoly1D {
  std::vector<double> a;  ///< size degree + 1
  std::vector<double> b;  ///< size degree + 1, b[0] unused (0)

  int degree() const noexcept { return static_cast<int>(a.size()) - 1; }
  double operator()(double x) const;
  /// Complex coefficient c_m, |m| <= degree.
  std::complex<double> coefficient(int m) const;
};

/// sum over k1 <= s1, k2 <= s2 of cc cos cos + cs cos sin + sc sin cos + ss sin sin.
struct TrigPoly2D {
  int s1 = 0;
  int s2 = 0;
  std::vector<double> cc, cs, sc, ss;  ///< (s1+1) x (s2+1), row-major by k1

  double operator()(double x1, double x2) const;
  std::complex<double> coefficient(int m1, int m2) const;
};

/// Deterministic in (degree, seed); the top-degree terms are bounded away from zero.
TrigPoly1D random_trig_poly_1d(int degree, std::uint64_t seed);
TrigPoly2D random_trig_poly_2d(int s1, int s2, std::uint64_t seed);

/// Accepted names (1D): constant(c), cosine(k), random-trigpoly(s,seed), box(a,b[,height]),
/// log-singular, l1-only.
/// Accepted names (2D): constant(c), random-trigpoly(s1,s2,seed), product-log-singular,
/// and tensor products A*B of two 1D names.
CorpusInfo corpus_info(std::string_view name);

SampledFunction1D corpus_1d(std::string_view name, const PeriodicGrid& grid);
SampledFunction2D corpus_2d(std::string_view name, const PeriodicGrid& grid1,
                            const PeriodicGrid& grid2);

/// The default corpus used by experiments.
std::vector<std::string> default_corpus_1d();
std::vector<std::string> default_corpus_2d();

}  // namespace summa
