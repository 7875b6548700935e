#include "summa/means.hpp"

#include <algorithm>
#include <cmath>

#include "summa/corpus.hpp"
#include "support.hpp"

namespace summa {
namespace {

PrefixField cosine_field_at(std::size_t j) {
  const PeriodicGrid g(32);
  return prefix_field_1d_at_index(analyze_1d(corpus_1d("cosine(1)", g)), j);
}

PrefixField random_field(std::uint64_t seed, std::size_t n = 16) {
  const auto f = testing::random_function_2d(n, n, seed);
  return prefix_field_at_index(analyze_2d(f), 3, 7);
}

TEST(ExponentGrid, DefaultsAndValidation) {
  const auto g = ExponentGrid::defaults();
  ASSERT_EQ(g.size(), 15u);
  EXPECT_EQ(g.p(0), 1.0625);
  EXPECT_EQ(g.p(14), 64.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_EQ(g.q(i), g.p(i) / (g.p(i) - 1.0));
    if (i > 0) {
      EXPECT_LT(g.q(i), g.q(i - 1));
    }
  }
  EXPECT_EQ(g.capped(8).size(), 9u);
  EXPECT_SUMMA_ERROR(ExponentGrid({1.0, 2.0}), ErrorCode::InvalidExponent);
  EXPECT_SUMMA_ERROR(ExponentGrid({3.0, 2.0}), ErrorCode::InvalidExponent);
  EXPECT_SUMMA_ERROR(ExponentGrid({}), ErrorCode::InvalidExponent);
  EXPECT_SUMMA_ERROR(conjugate_exponent(1.0), ErrorCode::InvalidExponent);
}

TEST(StrongMean, ZeroFunction) {
  const PeriodicGrid g(16);
  const auto field = prefix_field_at_index(analyze_2d(corpus_2d("constant(0)", g, g)), 2, 2);
  for (double p : {0.5, 1.0, 2.0, 7.0}) EXPECT_EQ(strong_mean_2d(field, 0.0, 8, 8, p), 0.0);
}

TEST(StrongMean, CosineSingleSurvivingTerm) {
  for (std::size_t j : {3u, 16u, 21u}) {
    const auto field = cosine_field_at(j);
    const double fx = std::cos(PeriodicGrid(32).point(j));
    for (int n : {1, 4, 16})
      for (double p : {1.0, 2.0, 3.5})
        EXPECT_NEAR(strong_mean_1d(field, fx, n, p), std::pow(std::abs(fx), p) / n, 1e-14);
  }
}

TEST(StrongMean, MatchesDirectLoop) {
  const PeriodicGrid g(32);
  const auto f = corpus_2d("random-trigpoly(2,2,5)", g, g);
  const auto field = prefix_field_at_index(analyze_2d(f), 9, 20);
  const double fx = f(9, 20);
  double s = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) s += std::pow(field(i, j) - fx, 2);
  EXPECT_NEAR(strong_mean_2d(field, fx, 8, 8, 2.0), s / 64, 1e-10);
}

TEST(StrongMean, Errors) {
  const auto field = random_field(1);
  EXPECT_SUMMA_ERROR(strong_mean_2d(field, 0.0, 4, 4, 0.0), ErrorCode::InvalidExponent);
  EXPECT_SUMMA_ERROR(strong_mean_2d(field, 0.0, 0, 4, 2.0), ErrorCode::InvalidScale);
  EXPECT_SUMMA_ERROR(strong_mean_2d(field, 0.0, 4, 9, 2.0), ErrorCode::InvalidScale);
}

TEST(StrongMean, PowerMeanMonotoneInP) {
  const auto field = random_field(2);
  const auto grid = ExponentGrid::defaults();
  double prev = 0.0;
  for (double p : grid.values()) {
    const double v = std::pow(strong_mean_2d(field, 0.1, 6, 5, p), 1.0 / p);
    EXPECT_GE(v, prev * (1 - 1e-12));
    prev = v;
  }
}

TEST(StrongMean, Homogeneous) {
  const auto f = testing::random_function_2d(16, 16, 3);
  const auto base = prefix_field_at_index(analyze_2d(f), 4, 4);
  for (double c : {0.1, 3.0, 100.0}) {
    const auto scaled_field = prefix_field_at_index(analyze_2d(scaled(f, c)), 4, 4);
    for (double p : {1.5, 2.0, 5.0}) {
      const double a = std::pow(strong_mean_2d(base, f(4, 4), 7, 6, p), 1.0 / p);
      const double b = std::pow(strong_mean_2d(scaled_field, c * f(4, 4), 7, 6, p), 1.0 / p);
      EXPECT_NEAR(b, c * a, 1e-10 * c * a);
    }
  }
}

TEST(PhiStrongMean, Examples) {
  const PeriodicGrid g(16);
  const auto cf = prefix_field_at_index(analyze_2d(corpus_2d("constant(4)", g, g)), 1, 1);
  EXPECT_NEAR(phi_strong_mean_2d(cf, 4.0, 8, 8, PhiSpec::exp_linear(1)), 0.0, 1e-13);

  const auto field = random_field(4);
  EXPECT_EQ(phi_strong_mean_2d(field, 0.2, 5, 7, PhiSpec::power(2)), strong_mean_2d(field, 0.2, 5, 7, 2.0));
  EXPECT_NEAR(phi_strong_mean_2d(field, 0.2, 5, 7, PhiSpec::power(1)), strong_mean_2d(field, 0.2, 5, 7, 1.0),
              1e-12);
}

TEST(SupPNormalizedMean, Examples) {
  const PeriodicGrid g(16);
  const auto grid = ExponentGrid::defaults();
  const auto zero = prefix_field_at_index(analyze_2d(corpus_2d("constant(0)", g, g)), 0, 0);
  EXPECT_EQ(sup_p_normalized_mean(zero, 4, 4, grid), 0.0);
  const auto one = prefix_field_at_index(analyze_2d(corpus_2d("constant(1)", g, g)), 0, 0);
  const double p0 = grid.p(0);
  EXPECT_NEAR(sup_p_normalized_mean(one, 4, 4, grid), 1.0 / (p0 * p0 * std::log(std::log(p0 + 2))), 1e-12);
}

TEST(SupPNormalizedMean, MatchesBruteForce) {
  const auto field = random_field(5);
  const auto grid = ExponentGrid::defaults();
  double best = 0.0;
  for (double p : grid.values()) {
    double s = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) s += std::pow(std::abs(field(i, j)), p);
    best = std::max(best, std::pow(s / 36, 1.0 / p) / (p * p * std::log(std::log(p + 2))));
  }
  EXPECT_NEAR(sup_p_normalized_mean(field, 6, 6, grid), best, 1e-12 * best);
}

TEST(TruncateSplit, Examples) {
  const std::vector<double> v{0.5, 2.0, -3.0};
  const auto [a, b] = truncate_split(v, 1.0);
  EXPECT_EQ(a, (std::vector<double>{0.5, 0.0, 0.0}));
  EXPECT_EQ(b, (std::vector<double>{0.0, 2.0, -3.0}));
  const auto [c, d] = truncate_split(v, 5.0);
  EXPECT_EQ(c, v);
  EXPECT_EQ(d, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_SUMMA_ERROR(truncate_split(v, 0.0), ErrorCode::InvalidThreshold);
}

TEST(TruncateSplit, PartsAddUpBitwise) {
  const auto v = testing::random_values(500, 9, -5.0, 5.0);
  const auto [a, b] = truncate_split(v, 1.7);
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(a[i] + b[i], v[i]);
    EXPECT_LE(std::abs(a[i]), 1.7);
    if (std::abs(v[i]) <= 1.7) {
      EXPECT_EQ(b[i], 0.0);
    }
  }
}

TEST(ExceedanceRatio, Examples) {
  const PeriodicGrid g(16);
  const auto cf = prefix_field_at_index(analyze_2d(corpus_2d("constant(2)", g, g)), 3, 3);
  for (double eps : {1e-6, 0.1, 5.0}) EXPECT_EQ(exceedance_ratio(cf, 2.0, eps, 8, 8), 0.0);

  const auto field = cosine_field_at(16);  // x = 0, f = 1, S_0 = 0
  for (int n : {1, 5, 16}) EXPECT_NEAR(exceedance_ratio(field, 1.0, 0.5, n, 1), 1.0 / n, 1e-15);
  EXPECT_SUMMA_ERROR(exceedance_ratio(field, 1.0, 0.0, 4, 1), ErrorCode::InvalidThreshold);
}

TEST(ExceedanceRatio, MatchesDirectCount) {
  const auto field = random_field(6);
  for (double eps : {0.05, 0.3, 1.0}) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 8; ++j) count += std::abs(field(i, j) - 0.1) > eps ? 1 : 0;
    EXPECT_EQ(exceedance_ratio(field, 0.1, eps, 7, 8), static_cast<double>(count) / 56);
  }
}

TEST(TrigPolyDecay, BoundHoldsBeyondDegree) {
  const PeriodicGrid g(64);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto f = corpus_2d("random-trigpoly(3,2," + std::to_string(seed) + ")", g, g);
    const auto spec = analyze_2d(f);
    for (std::size_t idx : {5u, 40u}) {
      const auto field = prefix_field_at_index(spec, idx, 63 - idx);
      const double fx = f(idx, 63 - idx);
      const auto c = trigpoly_decay_constants(field, fx, 3, 2, 2.0);
      for (int n = 4; n <= 32; ++n)
        for (int m = 3; m <= 32; ++m)
          EXPECT_LE(strong_mean_2d(field, fx, n, m, 2.0), c.c1 / n + c.c2 / m + 1e-12);
    }
  }
}

TEST(SamplePoints, SingularNeighboursComeFirst) {
  const PeriodicGrid g(64);
  const auto pts = sample_points_1d(g, 64, 3, corpus_info("log-singular"));
  ASSERT_EQ(pts.size(), 64u);
  EXPECT_EQ(pts[0], 31u);
  EXPECT_EQ(pts[1], 33u);
  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
  EXPECT_EQ(pts, sample_points_1d(g, 64, 3, corpus_info("log-singular")));

  const auto p2 = sample_points_2d(g, g, 64, 3, corpus_info("product-log-singular"));
  ASSERT_EQ(p2.size(), 64u);
  EXPECT_EQ(p2[0], (std::pair<std::size_t, std::size_t>{31, 31}));
  EXPECT_EQ(p2[3], (std::pair<std::size_t, std::size_t>{33, 33}));
}

TEST(MeanReport, SortsByPointThenIndices) {
  MeanReport r;
  r.records = {{1, 0, 0, 2, 1, "2", 0.5}, {0, 0, 0, 4, 4, "2", 0.1}, {0, 0, 0, 2, 8, "2", 0.2},
               {0, 0, 0, 2, 2, "2", 0.3}};
  r.sort();
  EXPECT_EQ(r.records[0].m, 2);
  EXPECT_EQ(r.records[1].m, 8);
  EXPECT_EQ(r.records[2].n, 4);
  EXPECT_EQ(r.records[3].point_id, 1u);
}

}  // namespace
}  // namespace summa
