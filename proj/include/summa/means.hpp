#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "summa/corpus.hpp"
#include "summa/phi.hpp"
#include "summa/spectrum.hpp"

namespace summa {

/// q with 1/p + 1/q = 1. Throws InvalidExponent for p <= 1.
double conjugate_exponent(double p);

/// p ln ln(p + 2), the normalization of the p-supremum functionals.
double p_normalizer(double p);

/// Finite increasing set of exponents p > 1 standing in for sup over p > 1.
class ExponentGrid {
 public:
  explicit ExponentGrid(std::vector<double> p);

  /// {1.0625, 1.125, 1.25, 1.5, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64}
  static ExponentGrid defaults();

  std::span<const double> values() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  double p(std::size_t i) const noexcept { return p_[i]; }
  double q(std::size_t i) const noexcept { return q_[i]; }
  /// The subset with p <= p_max.
  ExponentGrid capped(double p_max) const;

 private:
  std::vector<double> p_;
  std::vector<double> q_;
};

struct MeanRecord {
  std::size_t point_id = 0;
  double x1 = 0;
  double x2 = 0;
  int n = 0;
  int m = 0;
  std::string label;  ///< exponent or growth-function name
  double value = 0;
};

struct MeanReport {
  std::string corpus;
  std::size_t grid_size = 0;
  std::uint64_t seed = 0;
  std::vector<MeanRecord> records;

  /// Stable sort by (point_id, n, m).
  void sort();
};

/// |P(i,j) - f_value| for i < n, j < m, row-major. Throws InvalidScale on bad n, m.
std::vector<double> deviations(const PrefixField& field, double f_value, int n, int m);

/// (1/nm) sum_{i<n, j<m} |P(i,j) - f_value|^p, not rooted. Throws InvalidExponent for p <= 0.
double strong_mean_2d(const PrefixField& field, double f_value, int n, int m, double p);

/// One-dimensional strong mean (1/n) sum_{k<n} |S_k - f|^p on a one-column field.
inline double strong_mean_1d(const PrefixField& field, double f_value, int n, double p) {
  return strong_mean_2d(field, f_value, n, 1, p);
}

/// (1/nm) sum Phi(|P(i,j) - f_value|).
double phi_strong_mean_2d(const PrefixField& field, double f_value, int n, int m, const PhiSpec& phi);

/// |(1/nm) sum (P(i,j) - f_value)|: the (C,1,1) mean deviation at the anchor point.
double cesaro_deviation(const PrefixField& field, double f_value, int n, int m);

/// max over the grid of (strong mean with f_value = 0)^{1/p} / (p^2 ln ln(p+2)).
double sup_p_normalized_mean(const PrefixField& field, int n, int m, const ExponentGrid& grid);

/// Elementwise split into (|v| <= s ? v : 0, remainder). Throws InvalidThreshold for s <= 0.
std::pair<std::vector<double>, std::vector<double>> truncate_split(std::span<const double> values,
                                                                   double s);

/// #{(i,j) : |P(i,j) - f_value| > eps} / (nm). Checks the Chebyshev bound on every call.
double exceedance_ratio(const PrefixField& field, double f_value, double eps, int n, int m);

/// Constants of the bound strong_mean <= c1/n + c2/m, valid for n > s1, m > s2,
/// for a trigonometric polynomial of degree (s1, s2):
///   c1 = sum_{i<s1} |phi(i,s2)|^p + (1/(s2+1)) sum_{i<s1, j<s2} |phi(i,j)|^p
///   c2 = sum_{j<s2} |phi(s1,j)|^p
/// where phi(i,j) = P(i,j) - f_value.
struct DecayConstants {
  double c1 = 0;
  double c2 = 0;
};
DecayConstants trigpoly_decay_constants(const PrefixField& field, double f_value, int s1, int s2,
                                        double p);

/// Evaluation points: the points nearest the entry's singularities first, then
/// seeded distinct random grid points, `count` in total.
std::vector<std::size_t> sample_points_1d(const PeriodicGrid& grid, std::size_t count,
                                          std::uint64_t seed, const CorpusInfo& info);
std::vector<std::pair<std::size_t, std::size_t>> sample_points_2d(const PeriodicGrid& grid1,
                                                                  const PeriodicGrid& grid2,
                                                                  std::size_t count,
                                                                  std::uint64_t seed,
                                                                  const CorpusInfo& info);

}  // namespace summa
