#include "summa/operators.hpp"

#include <algorithm>
#include <cmath>

#include "summa/corpus.hpp"
#include "support.hpp"

namespace summa {
namespace {

// O(N^3) scan over every grid-aligned periodic arc.
std::vector<double> brute_force_maximal(const SampledFunction1D& f) {
  const std::size_t n = f.size();
  std::vector<double> mf(n, 0.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t len = 1; len <= n; ++len) {
      double s = 0.0;
      for (std::size_t d = 0; d < len; ++d) s += std::abs(f[(a + d) % n]);
      const double avg = s / static_cast<double>(len);
      for (std::size_t d = 0; d < len; ++d) mf[(a + d) % n] = std::max(mf[(a + d) % n], avg);
    }
  return mf;
}

// Linear interpolant of |f| at an arbitrary angle, built from coordinates.
double interp_abs(const SampledFunction1D& f, double y) {
  const double h = f.grid().step();
  double u = (y + kPi) / h;
  u -= std::floor(u / f.size()) * f.size();
  const auto i = static_cast<std::size_t>(std::floor(u)) % f.size();
  const double w = u - std::floor(u);
  return (1 - w) * std::abs(f[i]) + w * std::abs(f[(i + 1) % f.size()]);
}

double dense_gabisonia(const SampledFunction1D& f, std::size_t j, int n, double p, bool two_sided) {
  const double x = f.grid().point(j);
  const double q = p / (p - 1);
  const int count = static_cast<int>(std::floor(n * kPi));
  constexpr int kSub = 1024;
  double s = 0.0;
  for (int k = 1; k <= count; ++k) {
    double integral = 0.0;
    for (int i = 0; i < kSub; ++i) {
      const double t = (k - 1.0) / n + (i + 0.5) / (kSub * static_cast<double>(n));
      integral += interp_abs(f, x + t) + (two_sided ? interp_abs(f, x - t) : 0.0);
    }
    integral /= kSub * static_cast<double>(n);
    s += std::pow(n * integral / k, q);
  }
  return std::pow(s, 1 / q);
}

double partial_zeta_sq(int upto) {
  double s = 0.0;
  for (int k = 1; k <= upto; ++k) s += 1.0 / (static_cast<double>(k) * k);
  return s;
}

TEST(MaximalFunction, Constant) {
  const auto mf = maximal_function(corpus_1d("constant(-2.5)", PeriodicGrid(32)));
  for (double v : mf.values()) EXPECT_DOUBLE_EQ(v, 2.5);
}

TEST(MaximalFunction, BoxMatchesBruteForce) {
  const PeriodicGrid g(64);
  const double w = kPi / 8;
  std::vector<double> v;
  for (double x : g.points()) v.push_back(std::abs(x) <= w ? 1.0 : 0.0);
  const SampledFunction1D f(g, v);
  const auto want = brute_force_maximal(f);
  const auto got = maximal_function(f);
  for (std::size_t j = 0; j < 64; ++j) EXPECT_EQ(got[j], want[j]) << j;
}

TEST(MaximalFunction, RandomProperties) {
  const auto f = testing::random_function_1d(64, 7);
  const auto g = testing::random_function_1d(64, 8);
  const auto mf = maximal_function(f);
  const auto want = brute_force_maximal(f);
  const auto mneg = maximal_function(scaled(f, -1.0));
  std::vector<double> sum(64);
  for (std::size_t j = 0; j < 64; ++j) sum[j] = f[j] + g[j];
  const auto msum = maximal_function(SampledFunction1D(f.grid(), sum));
  const auto mg = maximal_function(g);
  const auto dyadic = dyadic_maximal_function(f);
  for (std::size_t j = 0; j < 64; ++j) {
    EXPECT_EQ(mf[j], want[j]);
    EXPECT_GE(mf[j], std::abs(f[j]));
    EXPECT_EQ(mneg[j], mf[j]);
    EXPECT_LE(msum[j], mf[j] + mg[j] + 1e-12);
    EXPECT_LE(dyadic[j], mf[j] + 1e-15);
    EXPECT_GE(dyadic[j], std::abs(f[j]));
  }
}

TEST(Gabisonia, ZeroFunction) {
  const auto f = corpus_1d("constant(0)", PeriodicGrid(64));
  for (auto sides : {Sidedness::TwoSided, Sidedness::OneSided}) {
    EXPECT_EQ(gabisonia(f, 5, 2.0, GabisoniaVariant::fixed(4, sides)), 0.0);
    EXPECT_EQ(gabisonia(f, 5, 1.5, GabisoniaVariant::dyadic(64, sides)), 0.0);
  }
}

TEST(Gabisonia, ConstantOneIsPartialZetaSum) {
  const auto f = corpus_1d("constant(1)", PeriodicGrid(256));
  // I_k = 2/n, so the value is 2 (sum_{k <= floor(64 pi)} k^-2)^{1/2}.
  const int count = static_cast<int>(std::floor(64 * kPi));
  ASSERT_EQ(count, 201);
  const double want = 2.0 * std::sqrt(partial_zeta_sq(count));
  EXPECT_NEAR(gabisonia(f, 17, 2.0, GabisoniaVariant::fixed(64)), want, 1e-12);
  EXPECT_NEAR(want, 2.5612, 1e-4);
}

TEST(Gabisonia, MatchesDenseQuadrature) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto f = testing::random_function_1d(64, seed);
    for (std::size_t j : {0u, 13u, 40u}) {
      for (bool two : {true, false}) {
        const auto v = GabisoniaVariant::fixed(8, two ? Sidedness::TwoSided : Sidedness::OneSided);
        const double want = dense_gabisonia(f, j, 8, 2.0, two);
        EXPECT_NEAR(gabisonia(f, j, 2.0, v), want, 1e-4 * want);
      }
    }
  }
}

TEST(Gabisonia, ProfileAndSupOverScales) {
  const auto f = testing::random_function_1d(128, 5);
  const auto variant = GabisoniaVariant::dyadic(128);
  EXPECT_EQ(variant.scales, (std::vector<int>{1, 2, 4, 8, 16, 32}));
  double best = 0.0;
  for (int n : variant.scales) {
    const auto prof = gabisonia_profile(f, 9, n, Sidedness::TwoSided);
    EXPECT_EQ(prof.size(), static_cast<std::size_t>(std::floor(n * kPi)));
    best = std::max(best, gabisonia_from_profile(prof, 3.0));
    EXPECT_EQ(gabisonia_from_profile(prof, 3.0), gabisonia(f, 9, 3.0, GabisoniaVariant::fixed(n)));
  }
  EXPECT_EQ(gabisonia(f, 9, 3.0, variant), best);
}

TEST(Gabisonia, Errors) {
  const auto f = testing::random_function_1d(64, 6);
  EXPECT_SUMMA_ERROR(gabisonia(f, 0, 1.0, GabisoniaVariant::fixed(2)), ErrorCode::InvalidExponent);
  EXPECT_SUMMA_ERROR(gabisonia(f, 0, 0.5, GabisoniaVariant::fixed(2)), ErrorCode::InvalidExponent);
  EXPECT_SUMMA_ERROR(gabisonia(f, 0, 2.0, GabisoniaVariant::fixed(0)), ErrorCode::InvalidScale);
  EXPECT_SUMMA_ERROR(gabisonia(f, 0, 2.0, GabisoniaVariant::fixed(17)), ErrorCode::InvalidScale);
  EXPECT_NO_THROW(gabisonia(f, 0, 2.0, GabisoniaVariant::fixed(16)));
}

TEST(Gabisonia, ExactHomogeneity) {
  const auto f = testing::random_function_1d(128, 11);
  for (double c : {0.1, 3.0, 100.0, -2.0}) {
    const auto cf = scaled(f, c);
    for (auto sides : {Sidedness::TwoSided, Sidedness::OneSided})
      for (double p : {1.0625, 2.0, 16.0})
        for (std::size_t j : {0u, 77u}) {
          const auto v = GabisoniaVariant::dyadic(128, sides);
          const double a = gabisonia(f, j, p, v);
          EXPECT_NEAR(gabisonia(cf, j, p, v), std::abs(c) * a, 1e-12 * std::abs(c) * a);
        }
  }
}

TEST(Gabisonia, TwoSidedDominatesOneSided) {
  const auto f = corpus_1d("l1-only", PeriodicGrid(128));
  for (std::size_t j = 0; j < 128; j += 5)
    for (int n : {1, 4, 32})
      for (double p : {1.25, 2.0, 8.0})
        EXPECT_GE(gabisonia(f, j, p, GabisoniaVariant::fixed(n, Sidedness::TwoSided)),
                  gabisonia(f, j, p, GabisoniaVariant::fixed(n, Sidedness::OneSided)));
}

TEST(Gabisonia, FieldMatchesPointwise) {
  const auto f = testing::random_function_1d(64, 12);
  const auto v = GabisoniaVariant::dyadic(64, Sidedness::OneSided);
  const auto field = gabisonia_field(f, 2.0, v);
  for (std::size_t j = 0; j < 64; ++j) EXPECT_EQ(field[j], gabisonia(f, j, 2.0, v));
}

TEST(NormalizedGabisonia, EqualsExplicitLoop) {
  const auto f = corpus_1d("log-singular", PeriodicGrid(64));
  const auto grid = ExponentGrid::defaults();
  const auto v = GabisoniaVariant::dyadic(64, Sidedness::OneSided);
  const auto field = normalized_gabisonia_field(f, grid, v);
  for (std::size_t j : {0u, 31u, 33u}) {
    double best = 0.0;
    for (double p : grid.values()) best = std::max(best, gabisonia(f, j, p, v) / (p * std::log(std::log(p + 2))));
    EXPECT_NEAR(normalized_gabisonia(f, j, grid, v), best, 1e-14 * best);
    EXPECT_EQ(field[j], normalized_gabisonia(f, j, grid, v));
  }
}

TEST(GabisoniaDirectional, ConstantInX2) {
  const PeriodicGrid g1(64), g2(16);
  const auto g = testing::random_function_1d(64, 13);
  std::vector<double> v(64 * 16);
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 16; ++j) v[i * 16 + j] = g[i];
  const SampledFunction2D f(g1, g2, v);
  const auto variant = GabisoniaVariant::fixed(4);
  const auto out = gabisonia_directional_2d(f, 1, 2.0, variant);
  for (std::size_t i = 0; i < 64; ++i) {
    const double want = gabisonia(g, i, 2.0, variant);
    for (std::size_t j = 0; j < 16; ++j) EXPECT_EQ(out(i, j), want);
  }
}

TEST(GabisoniaDirectional, ConstantOne) {
  const PeriodicGrid g(64);
  const auto out = gabisonia_directional_2d(corpus_2d("constant(1)", g, g), 2, 3.0, GabisoniaVariant::fixed(8));
  const double want = gabisonia(corpus_1d("constant(1)", g), 0, 3.0, GabisoniaVariant::fixed(8));
  for (double x : out.values()) EXPECT_NEAR(x, want, 1e-13);
}

TEST(GabisoniaDirectional, SectionOracle) {
  const auto f = testing::random_function_2d(32, 64, 14);
  const auto v = GabisoniaVariant::dyadic(32);
  const auto w = GabisoniaVariant::dyadic(64, Sidedness::OneSided);
  const auto ax1 = gabisonia_directional_2d(f, 1, 2.0, v);
  const auto ax2 = gabisonia_directional_2d(f, 2, 2.0, w);
  std::mt19937_64 rng(3);
  for (int r = 0; r < 8; ++r) {
    const std::size_t j = rng() % 64, i = rng() % 32;
    const auto s1 = f.section_along_x1(j);
    const auto s2 = f.section_along_x2(i);
    for (std::size_t k = 0; k < 32; ++k) EXPECT_EQ(ax1(k, j), gabisonia(s1, k, 2.0, v));
    for (std::size_t k = 0; k < 64; ++k) EXPECT_EQ(ax2(i, k), gabisonia(s2, k, 2.0, w));
  }
  EXPECT_SUMMA_ERROR(gabisonia_directional_2d(f, 3, 2.0, v), ErrorCode::InvalidArgument);
}

TEST(Oskolkov, SingleInterval) {
  const IntervalFamily one({{0.5, 0.2, 0.0}});
  EXPECT_DOUBLE_EQ(oskolkov_sum(one, 0.6, 2.0), 1.0);
  // Arc distance from the centre 0.6 to -2.5 is 3.1 (the other way round is 2pi - 3.1).
  const double d = 3.1;
  EXPECT_NEAR(oskolkov_sum(one, -2.5, 3.0), std::pow(0.2 / (d + 0.2), 1.5), 1e-15);
  EXPECT_SUMMA_ERROR(oskolkov_sum(one, 0.0, 1.0), ErrorCode::InvalidExponent);
  EXPECT_EQ(oskolkov_sum(IntervalFamily(), 0.3, 2.0), 0.0);
}

TEST(Oskolkov, RandomFamilyTermByTerm) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto fam = random_family(20, seed);
    ASSERT_EQ(fam.size(), 20u);
    auto reversed = fam.intervals();
    std::reverse(reversed.begin(), reversed.end());
    const IntervalFamily relabeled(reversed);
    for (double x : {-3.0, -0.4, 1.1, 3.1}) {
      for (double p : {1.0625, 2.0, 9.0}) {
        const double q = p / (p - 1);
        double want = 0.0;
        for (const auto& iv : fam.intervals()) {
          double d = std::abs(x - iv.center());
          d = std::min(d, kTwoPi - d);
          const double term = iv.length / (d + iv.length);
          EXPECT_LE(term, 1.0);
          want += std::pow(term, q);
        }
        const double got = oskolkov_sum(fam, x, p);
        EXPECT_NEAR(got, want, 1e-12 * std::max(1.0, want));
        EXPECT_NEAR(oskolkov_sum(relabeled, x, p), got, 1e-12 * std::max(1.0, want));
      }
    }
  }
}

TEST(IntervalFamily, RejectsOverlapAndBadLengths) {
  EXPECT_SUMMA_ERROR(IntervalFamily({{0.0, 1.0, 0}, {0.5, 1.0, 0}}), ErrorCode::InvalidFamily);
  EXPECT_SUMMA_ERROR(IntervalFamily({{3.0, 1.0, 0}, {-3.0, 1.0, 0}}), ErrorCode::InvalidFamily);
  EXPECT_SUMMA_ERROR(IntervalFamily({{0.0, 0.0, 0}}), ErrorCode::InvalidFamily);
  EXPECT_SUMMA_ERROR(IntervalFamily({{0.0, 7.0, 0}}), ErrorCode::InvalidFamily);
  EXPECT_NO_THROW(IntervalFamily({{0.0, 1.0, 0}, {1.0, 1.0, 0}}));
}

TEST(NormalizedSupP, Examples) {
  const auto grid = ExponentGrid::defaults();
  EXPECT_EQ(normalized_sup_p([](double) { return 0.0; }, grid, SupMode::Raw), 0.0);
  const double p0 = grid.p(0);
  const double want = 1.0 / (p0 * std::log(std::log(p0 + 2)));
  EXPECT_NEAR(normalized_sup_p([](double) { return 1.0; }, grid, SupMode::Raw), want, 1e-15);
  EXPECT_NEAR(normalized_sup_p([](double) { return 1.0; }, grid, SupMode::Rooted), want, 1e-15);
}

TEST(NormalizedSupP, OskolkovCoreMatchesLoop) {
  const auto fam = random_family(20, 9);
  const auto grid = ExponentGrid::defaults();
  for (auto mode : {SupMode::Raw, SupMode::Rooted}) {
    const double got = normalized_sup_p([&](double p) { return oskolkov_sum(fam, 0.7, p); }, grid, mode);
    double best = 0.0;
    for (double p : grid.values()) {
      double core = oskolkov_sum(fam, 0.7, p);
      if (mode == SupMode::Rooted) core = std::pow(core, (p - 1) / p);
      best = std::max(best, core / (p * std::log(std::log(p + 2))));
    }
    EXPECT_NEAR(got, best, 1e-14 * best);
  }
}

}  // namespace
}  // namespace summa
